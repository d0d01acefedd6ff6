#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weft/dom/dom_tree.h"
#include "weft/scheduler/traversal.h"
#include "weft/style/stylesheet.h"
#include "weft/style/values.h"

namespace weft {

inline constexpr double kRootFontSize = 16;

// Computed styles indexed by NodeId; only elements have entries.
class StyleMap {
 public:
  StyleMap() = default;
  explicit StyleMap(std::size_t id_capacity) : styles_(id_capacity) {}

  const ComputedStyle* find(NodeId id) const {
    return id.value < styles_.size() && styles_[id.value] ? &*styles_[id.value] : nullptr;
  }
  void set(NodeId id, const ComputedStyle& style) {
    if (id.value >= styles_.size()) styles_.resize(id.value + 1);
    styles_[id.value] = style;
  }
  void erase(NodeId id) {
    if (id.value < styles_.size()) styles_[id.value].reset();
  }
  std::size_t capacity() const { return styles_.size(); }

 private:
  std::vector<std::optional<ComputedStyle>> styles_;
};

Display default_display(std::string_view element_name);

// Specificity of declarations from a style="" attribute.
inline constexpr Specificity kInlineStyleSpecificity{2, 0, 0};

// Resolves one element's style. `parent_style` is null for the root element.
ComputedStyle cascade(NodeId node, const DomTree& tree, std::span<const Rule> rules,
                      const ComputedStyle* parent_style);

// Styles every element with a parallel top-down traversal of the DOM.
StyleMap compute_styles(const DomTree& tree, std::span<const Rule> rules,
                        const TraversalOptions& options = {});

// Recomputes `root` and its element descendants in place, reading the parent
// style already in `styles`.
void restyle_subtree(const DomTree& tree, std::span<const Rule> rules, NodeId root, StyleMap& styles);

// "id: property=value" lines, elements in document order, properties sorted.
std::string dump_style(const DomTree& tree, const StyleMap& styles);

}  // namespace weft
