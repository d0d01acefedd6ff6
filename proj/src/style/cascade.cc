#include "weft/style/cascade.h"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "weft/base/format.h"
#include "weft/base/overloaded.h"

namespace weft {

namespace {

struct Matched {
  Specificity specificity;
  std::size_t order;
  const std::vector<Declaration>* declarations;
};

double resolve(const Length& l, double em_basis) {
  return l.unit == LengthUnit::kEm ? l.value * em_basis : l.value;
}

double& edge(ComputedStyle& style, Property p) {
  switch (p) {
    case Property::kMarginTop: return style.margin.top;
    case Property::kMarginRight: return style.margin.right;
    case Property::kMarginBottom: return style.margin.bottom;
    case Property::kMarginLeft: return style.margin.left;
    case Property::kPaddingTop: return style.padding.top;
    case Property::kPaddingRight: return style.padding.right;
    case Property::kPaddingBottom: return style.padding.bottom;
    default: return style.padding.left;
  }
}

}  // namespace

Display default_display(std::string_view name) {
  static constexpr std::array<std::string_view, 12> kBlock = {
      "html", "body", "div", "p", "h1", "h2", "h3", "h4", "h5", "h6", "ul", "ol"};
  static constexpr std::array<std::string_view, 6> kHidden = {"head", "script", "style", "title", "meta", "link"};
  if (name == "li") return Display::kListItem;
  if (std::find(kBlock.begin(), kBlock.end(), name) != kBlock.end()) return Display::kBlock;
  if (std::find(kHidden.begin(), kHidden.end(), name) != kHidden.end()) return Display::kNone;
  return Display::kInline;
}

ComputedStyle cascade(NodeId node, const DomTree& tree, std::span<const Rule> rules,
                      const ComputedStyle* parent_style) {
  const ElementData* element = tree.element(node);
  if (!element) {
    throw StyleError(StyleErrc::kNotAnElement, "node " + std::to_string(node.value) + " is not an element");
  }
  std::vector<Matched> matched;
  for (const Rule& rule : rules) {
    if (matches(rule.selector, node, tree)) {
      matched.push_back({specificity(rule.selector), rule.source_order, &rule.declarations});
    }
  }
  ParsedDeclarations inline_style;
  if (const std::string* attr = element->attribute("style")) {
    inline_style = parse_declarations(*attr);
    matched.push_back({kInlineStyleSpecificity, std::numeric_limits<std::size_t>::max(),
                       &inline_style.declarations});
  }
  std::stable_sort(matched.begin(), matched.end(), [](const Matched& a, const Matched& b) {
    if (a.specificity != b.specificity) return a.specificity < b.specificity;
    return a.order < b.order;
  });

  std::array<const CssValue*, kPropertyCount> winner{};
  for (const Matched& m : matched) {
    for (const Declaration& d : *m.declarations) winner[static_cast<std::size_t>(d.property)] = &d.value;
  }

  ComputedStyle style;
  double parent_font = parent_style ? parent_style->font_size : kRootFontSize;
  style.font_size = parent_font;
  if (const CssValue* v = winner[static_cast<std::size_t>(Property::kFontSize)]) {
    style.font_size = resolve(std::get<Length>(*v), parent_font);
  }
  style.color = parent_style ? parent_style->color : Color{Rgb{}};
  style.display = default_display(element->name);

  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    const CssValue* v = winner[i];
    if (!v) continue;
    auto p = static_cast<Property>(i);
    switch (p) {
      case Property::kFontSize: break;
      case Property::kDisplay: style.display = std::get<Display>(*v); break;
      case Property::kColor: style.color = std::get<Color>(*v); break;
      case Property::kBackgroundColor: style.background_color = std::get<Color>(*v); break;
      case Property::kWidth:
      case Property::kHeight: {
        std::optional<double> value;
        if (const auto* l = std::get_if<Length>(v)) value = resolve(*l, style.font_size);
        (p == Property::kWidth ? style.width : style.height) = value;
        break;
      }
      default: edge(style, p) = resolve(std::get<Length>(*v), style.font_size); break;
    }
  }
  return style;
}

StyleMap compute_styles(const DomTree& tree, std::span<const Rule> rules, const TraversalOptions& options) {
  // Shape over the document node plus every element, in document order.
  std::vector<NodeId> ids;
  std::vector<std::uint32_t> parents;
  std::map<std::uint32_t, std::uint32_t> index_of;
  for (NodeId id : tree.preorder()) {
    if (id != tree.root() && !tree.element(id)) continue;
    std::uint32_t index = static_cast<std::uint32_t>(ids.size());
    index_of[id.value] = index;
    ids.push_back(id);
    const auto& parent = tree.node(id).parent;
    parents.push_back(parent ? index_of.at(parent->value) : TreeShape::kNoParent);
  }
  StyleMap styles(tree.id_capacity());
  std::vector<std::optional<ComputedStyle>> slots(ids.size());
  TreeShape shape(parents);
  execute_traversal(
      shape, TraversalDirection::kTopDown,
      [&](std::uint32_t i) {
        if (i == 0) return;
        std::uint32_t p = shape.parent(i);
        const ComputedStyle* parent_style = p == 0 ? nullptr : &*slots[p];
        slots[i] = cascade(ids[i], tree, rules, parent_style);
      },
      options);
  for (std::size_t i = 1; i < ids.size(); ++i) styles.set(ids[i], *slots[i]);
  return styles;
}

void restyle_subtree(const DomTree& tree, std::span<const Rule> rules, NodeId root, StyleMap& styles) {
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const DomNode& n = tree.node(id);
    if (!n.is_element()) continue;
    const ComputedStyle* parent_style = n.parent ? styles.find(*n.parent) : nullptr;
    styles.set(id, cascade(id, tree, rules, parent_style));
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
}

std::string dump_style(const DomTree& tree, const StyleMap& styles) {
  std::string out;
  auto length = [](std::optional<double> v) { return v ? format_px(*v) + "px" : std::string("auto"); };
  for (NodeId id : tree.preorder()) {
    const ComputedStyle* s = styles.find(id);
    if (!s || !tree.element(id)) continue;
    std::vector<std::pair<std::string_view, std::string>> props = {
        {"display", std::string(display_name(s->display))},
        {"width", length(s->width)},
        {"height", length(s->height)},
        {"margin-top", length(s->margin.top)},
        {"margin-right", length(s->margin.right)},
        {"margin-bottom", length(s->margin.bottom)},
        {"margin-left", length(s->margin.left)},
        {"padding-top", length(s->padding.top)},
        {"padding-right", length(s->padding.right)},
        {"padding-bottom", length(s->padding.bottom)},
        {"padding-left", length(s->padding.left)},
        {"color", format_color(s->color)},
        {"background-color", format_color(s->background_color)},
        {"font-size", length(s->font_size)},
    };
    std::sort(props.begin(), props.end());
    for (const auto& [name, value] : props) {
      out += std::to_string(id.value) + ": " + std::string(name) + "=" + value + "\n";
    }
  }
  return out;
}

}  // namespace weft
