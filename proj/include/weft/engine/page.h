#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weft/base/error.h"
#include "weft/dom/dom_tree.h"
#include "weft/engine/script.h"
#include "weft/flow/flow_tree.h"
#include "weft/layout/layout.h"
#include "weft/style/cascade.h"

namespace weft {

enum class EngineErrc { kIo, kBadPath, kPipeline, kUsage };
using EngineError = CodedError<EngineErrc>;

// Throws EngineError(kIo) naming the path.
std::string read_file(const std::string& path);

// Rules from the given stylesheet texts, then from <style> elements in
// document order, with one running source order.
std::vector<Rule> collect_rules(const DomTree& tree, std::span<const std::string> css_texts,
                                std::vector<std::string>* diagnostics = nullptr);

// Everything downstream of parsing for one document.
struct Page {
  DomTree dom;
  std::vector<std::string> css_texts;
  std::vector<Rule> rules;
  StyleMap styles;
  FlowTree flows;
  std::vector<std::string> diagnostics;
};

// Styles, builds flows and lays out `dom` from scratch.
Page build_page(DomTree dom, std::vector<std::string> css_texts, const LayoutOptions& options);

// Parses, builds, then applies the page scripts' deferred mutation commands
// with an incremental relayout.
Page load_page(std::string_view html, std::vector<std::string> css_texts, const LayoutOptions& options);

// Re-runs style, flow construction and layout from scratch on page.dom.
void rebuild_all(Page& page, const LayoutOptions& options);

struct MutationOutcome {
  std::vector<FlowId> dirtied;  // flows marked self_dirty
  bool full_rebuild = false;
  std::vector<std::string> diagnostics;
};

// Applies mutation commands to the DOM, restyles the touched elements and
// rebuilds the smallest enclosing block flow of each change, leaving dirty
// bits for incremental_relayout. Write commands are reported and ignored.
// Throws EngineError(kBadPath) for a path that resolves to nothing.
MutationOutcome apply_mutations(Page& page, std::span<const ScriptCommand> commands);

// Re-runs the three passes only where dirty bits (or a changed containing
// width) require it, then clears the bits.
LayoutStats incremental_relayout(FlowTree& flows, const LayoutOptions& options);

}  // namespace weft
