#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weft/base/error.h"
#include "weft/dom/dom_tree.h"
#include "weft/scheduler/small_buffer.h"
#include "weft/scheduler/tree_shape.h"
#include "weft/style/values.h"

namespace weft {

struct FlowId {
  std::uint32_t value = 0;

  friend auto operator<=>(const FlowId&, const FlowId&) = default;
};

inline constexpr std::string_view kMarkerGlyph = "• ";

struct TextFragment {
  std::string text;  // whitespace-collapsed, trimmed, non-empty
  ComputedStyle style;
  NodeId dom_origin;
  // Whether the source had whitespace before/after the trimmed text.
  bool space_before = false;
  bool space_after = false;
};

struct MarkerFragment {
  std::string glyph;
  ComputedStyle style;
  NodeId dom_origin;
};

using Fragment = std::variant<TextFragment, MarkerFragment>;

enum class FlowKind : std::uint8_t { kBlock, kInline };

// Part of a word in one style.
struct TextPiece {
  std::string text;
  double font_size = 0;
  Color color;
};

// Unbreakable unit for line breaking: a word (possibly spanning several
// fragments) or a marker glyph.
struct TextUnit {
  std::vector<TextPiece> pieces;
  double width = 0;
  // A space separates this unit from the previous one; its advance uses the
  // previous unit's trailing font size.
  bool space_before = false;
  double space_width = 0;
};

struct LineSegment {
  double x = 0;  // from the line's left edge
  std::string text;
  double font_size = 0;
  Color color;
};

struct LineBox {
  double top = 0;  // from the flow's top edge
  double height = 0;
  double baseline = 0;  // from the flow's top edge
  double width = 0;
  std::vector<LineSegment> segments;
};

struct LayoutMetrics {
  double min_width = 0;
  double pref_width = 0;
  double used_width = 0;
  double used_height = 0;
  // Border-box offset from the parent's border box (the root's is from the
  // viewport origin). Absolute positions are resolved by walking parents.
  double x = 0;
  double y = 0;
  double content_width = 0;
  std::vector<LineBox> lines;
  bool intrinsic_done = false;
  bool width_done = false;
  bool height_done = false;
  // Set by the width pass when children must be re-laid out even if clean.
  bool children_inputs_changed = false;
};

struct Flow {
  FlowKind kind = FlowKind::kBlock;
  ComputedStyle style;
  std::optional<NodeId> dom_origin;  // absent for anonymous flows
  std::optional<FlowId> parent;
  SmallBuffer<FlowId> children;
  std::vector<Fragment> fragments;  // inline flows only
  std::vector<TextUnit> units;      // derived from fragments at build time
  LayoutMetrics metrics;
  bool self_dirty = false;
  bool descendant_dirty = false;
  bool live = true;
};

enum class FlowErrc { kMissingStyle, kNoSuchFlow };
using FlowError = CodedError<FlowErrc>;

// Arena of flows. Ids of discarded flows are not reused.
class FlowTree {
 public:
  bool empty() const { return !root_; }
  FlowId root() const { return *root_; }
  std::optional<FlowId> root_if_any() const { return root_; }

  Flow& at(FlowId id) { return flows_[id.value]; }
  const Flow& at(FlowId id) const { return flows_[id.value]; }
  std::size_t id_capacity() const { return flows_.size(); }
  std::size_t live_count() const { return live_; }

  FlowId add(Flow flow);
  void set_root(FlowId id) { root_ = id; }
  void clear();

  // Marks every descendant of `id` dead and empties its child list.
  void discard_children(FlowId id);

  // Block flow generated by an element, if any.
  std::optional<FlowId> block_for(NodeId node) const;

  // Live flows in pre-order.
  std::vector<FlowId> preorder() const;

  // Shape for the scheduler: index i of the shape is order[i].
  struct Indexed {
    TreeShape shape;
    std::vector<FlowId> order;
  };
  Indexed indexed() const;

  // Viewport of the last completed layout.
  std::optional<double> laid_out_viewport;

 private:
  std::vector<Flow> flows_;
  std::optional<FlowId> root_;
  std::vector<std::optional<FlowId>> block_by_node_;
  std::size_t live_ = 0;
};

}  // namespace weft
