#pragma once

#include <string>
#include <vector>

#include "weft/dom/dom_tree.h"
#include "weft/flow/flow_tree.h"
#include "weft/style/cascade.h"

namespace weft {

// Builds the flow tree rooted at the html element. Inline elements are
// flattened into the fragments of anonymous inline flows; block-level
// descendants of inline elements are hoisted into the enclosing block.
// Throws FlowError(kMissingStyle) when a displayed element has no style.
FlowTree build_flow_tree(const DomTree& tree, const StyleMap& styles);

// Replaces the children of block flow `id` with a fresh build from its
// element, refreshing its own style. The block and every new flow are marked
// self_dirty and its ancestors descendant_dirty.
void rebuild_flow_children(FlowTree& flows, FlowId id, const DomTree& tree, const StyleMap& styles);

// Line-breaking units of an inline flow's fragments.
std::vector<TextUnit> make_text_units(const std::vector<Fragment>& fragments);

// Whitespace runs become one space; leading and trailing space is trimmed.
std::string collapse_whitespace(std::string_view text);

double char_advance(double font_size);
double line_height(double font_size);
std::size_t code_point_count(std::string_view utf8);

std::string dump_flow(const FlowTree& flows);

}  // namespace weft
