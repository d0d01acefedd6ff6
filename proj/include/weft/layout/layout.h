#pragma once

#include <string>
#include <vector>

#include "weft/base/error.h"
#include "weft/flow/flow_tree.h"
#include "weft/scheduler/traversal.h"

namespace weft {

inline constexpr double kDefaultViewportWidth = 800;

enum class LayoutErrc { kIncomplete };
using LayoutError = CodedError<LayoutErrc>;

struct LayoutOptions {
  double viewport_width = kDefaultViewportWidth;
  TraversalOptions traversal;
};

struct LayoutStats {
  TraversalStats intrinsic;
  TraversalStats widths;
  TraversalStats heights;

  std::size_t visits() const { return intrinsic.visits() + widths.visits() + heights.visits(); }
};

// Per-flow steps shared by every driver. Each writes only the visited
// flow's metrics, except that compute_height also places its children
// (whose own passes have finished by then).
void compute_intrinsic_width(FlowTree& flows, FlowId id);
void assign_width(FlowTree& flows, FlowId id, double viewport_width);
void compute_height(FlowTree& flows, FlowId id);

// Greedy line breaking of `units` into lines at most `width` wide, except
// that a line always takes at least one unit.
std::vector<LineBox> break_lines(const std::vector<TextUnit>& units, double width);

// Three traversals through the work-stealing scheduler.
LayoutStats layout(FlowTree& flows, const LayoutOptions& options);

// Same three passes as plain recursion on the calling thread.
void layout_serial(FlowTree& flows, double viewport_width);

struct Point {
  double x = 0;
  double y = 0;
};

// Border-box origin of every live flow in viewport coordinates, indexed by
// FlowId. Throws LayoutError(kIncomplete) if any live flow lacks geometry.
std::vector<Point> absolute_origins(const FlowTree& flows);

// "kind origin x y w h" per flow in pre-order, two decimals.
std::string dump_layout(const FlowTree& flows);

}  // namespace weft
