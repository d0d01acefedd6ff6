#include "weft/flow/builder.h"

#include "weft/base/format.h"
#include "weft/base/overloaded.h"
#include "weft/base/utf8.h"

namespace weft {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

// Content of a block in document order: inline fragments or block-level
// child elements.
using Item = std::variant<Fragment, NodeId>;

const ComputedStyle& style_of(const StyleMap& styles, NodeId id) {
  const ComputedStyle* s = styles.find(id);
  if (!s) throw FlowError(FlowErrc::kMissingStyle, "no style for node " + std::to_string(id.value));
  return *s;
}

ComputedStyle anonymous_style(const ComputedStyle& parent) {
  ComputedStyle s;
  s.display = Display::kInline;
  s.font_size = parent.font_size;
  s.color = parent.color;
  return s;
}

class Builder {
 public:
  Builder(FlowTree& flows, const DomTree& tree, const StyleMap& styles)
      : flows_(flows), tree_(tree), styles_(styles) {}

  FlowId build_block(NodeId element, std::optional<FlowId> parent) {
    Flow flow;
    flow.kind = FlowKind::kBlock;
    flow.style = style_of(styles_, element);
    flow.dom_origin = element;
    flow.parent = parent;
    flow.self_dirty = mark_dirty_;
    FlowId id = flows_.add(std::move(flow));
    build_children(id, element);
    return id;
  }

  void build_children(FlowId id, NodeId element) {
    std::vector<Item> items;
    const ComputedStyle& style = flows_.at(id).style;
    if (style.display == Display::kListItem) {
      items.emplace_back(Fragment{MarkerFragment{std::string(kMarkerGlyph), style, element}});
    }
    bool pending_space = false;
    collect(element, items, pending_space);

    std::vector<Fragment> run;
    auto flush = [&] {
      if (run.empty()) return;
      Flow inline_flow;
      inline_flow.kind = FlowKind::kInline;
      inline_flow.style = anonymous_style(flows_.at(id).style);
      inline_flow.parent = id;
      inline_flow.units = make_text_units(run);
      inline_flow.fragments = std::move(run);
      inline_flow.self_dirty = mark_dirty_;
      run.clear();
      FlowId child = flows_.add(std::move(inline_flow));
      flows_.at(id).children.push_back(child);
    };
    for (auto& item : items) {
      if (auto* fragment = std::get_if<Fragment>(&item)) {
        run.push_back(std::move(*fragment));
      } else {
        flush();
        FlowId child = build_block(std::get<NodeId>(item), id);
        flows_.at(id).children.push_back(child);
      }
    }
    flush();
  }

  bool mark_dirty_ = false;

 private:
  void collect(NodeId parent, std::vector<Item>& items, bool& pending_space) {
    for (NodeId child : tree_.node(parent).children) {
      const DomNode& n = tree_.node(child);
      if (const auto* text = std::get_if<TextData>(&n.kind)) {
        std::string collapsed = collapse_whitespace(text->data);
        if (collapsed.empty()) {
          if (!text->data.empty()) pending_space = true;
          continue;
        }
        TextFragment fragment{collapsed, style_of(styles_, parent), child,
                              pending_space || is_space(text->data.front()), is_space(text->data.back())};
        pending_space = false;
        items.emplace_back(Fragment{std::move(fragment)});
      } else if (n.is_element()) {
        const ComputedStyle& style = style_of(styles_, child);
        if (style.display == Display::kNone) continue;
        if (style.is_block_level()) {
          pending_space = false;
          items.emplace_back(child);
        } else {
          collect(child, items, pending_space);
        }
      }
    }
  }

  FlowTree& flows_;
  const DomTree& tree_;
  const StyleMap& styles_;
};

std::optional<NodeId> html_element(const DomTree& tree) {
  for (NodeId child : tree.node(tree.root()).children) {
    if (tree.element(child)) return child;
  }
  return std::nullopt;
}

void mark_ancestors(FlowTree& flows, FlowId id) {
  std::optional<FlowId> up = flows.at(id).parent;
  while (up) {
    flows.at(*up).descendant_dirty = true;
    up = flows.at(*up).parent;
  }
}

}  // namespace

double char_advance(double font_size) { return 0.5 * font_size; }
double line_height(double font_size) { return 1.2 * font_size; }

std::size_t code_point_count(std::string_view utf8) {
  std::size_t count = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
  }
  return count;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  bool space = false;
  for (char c : text) {
    if (is_space(c)) {
      space = true;
      continue;
    }
    if (space && !out.empty()) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<TextUnit> make_text_units(const std::vector<Fragment>& fragments) {
  std::vector<TextUnit> units;
  bool glue = false;          // next text may continue the last unit
  bool pending_space = false;  // previous fragment ended in whitespace
  bool after_marker = false;
  auto add_piece = [](TextUnit& unit, std::string_view text, const ComputedStyle& style) {
    unit.pieces.push_back(TextPiece{std::string(text), style.font_size, style.color});
    unit.width += static_cast<double>(code_point_count(text)) * char_advance(style.font_size);
  };
  for (const Fragment& fragment : fragments) {
    if (const auto* marker = std::get_if<MarkerFragment>(&fragment)) {
      TextUnit unit;
      add_piece(unit, marker->glyph, marker->style);
      units.push_back(std::move(unit));
      glue = false;
      pending_space = false;
      after_marker = true;
      continue;
    }
    const auto& text = std::get<TextFragment>(fragment);
    bool separated = pending_space || text.space_before;
    std::string_view rest = text.text;
    bool first = true;
    while (!rest.empty()) {
      std::size_t end = rest.find(' ');
      std::string_view word = rest.substr(0, end);
      rest = end == std::string_view::npos ? std::string_view() : rest.substr(end + 1);
      if (first && !separated && glue && !units.empty()) {
        add_piece(units.back(), word, text.style);
      } else {
        TextUnit unit;
        unit.space_before = !units.empty() && !(first && after_marker);
        if (unit.space_before) unit.space_width = char_advance(units.back().pieces.back().font_size);
        add_piece(unit, word, text.style);
        units.push_back(std::move(unit));
      }
      first = false;
    }
    glue = !text.space_after;
    pending_space = text.space_after;
    after_marker = false;
  }
  return units;
}

FlowTree build_flow_tree(const DomTree& tree, const StyleMap& styles) {
  FlowTree flows;
  auto html = html_element(tree);
  if (!html) return flows;
  if (style_of(styles, *html).display == Display::kNone) return flows;
  Builder builder(flows, tree, styles);
  FlowId root = builder.build_block(*html, std::nullopt);
  flows.set_root(root);
  return flows;
}

void rebuild_flow_children(FlowTree& flows, FlowId id, const DomTree& tree, const StyleMap& styles) {
  Flow& flow = flows.at(id);
  if (flow.kind != FlowKind::kBlock || !flow.dom_origin) {
    throw FlowError(FlowErrc::kNoSuchFlow, "only element block flows can be rebuilt");
  }
  flows.discard_children(id);
  flow.style = style_of(styles, *flow.dom_origin);
  flow.self_dirty = true;
  Builder builder(flows, tree, styles);
  builder.mark_dirty_ = true;
  builder.build_children(id, *flows.at(id).dom_origin);
  mark_ancestors(flows, id);
}

std::string dump_flow(const FlowTree& flows) {
  std::string out;
  if (flows.empty()) return out;
  std::vector<std::pair<FlowId, std::size_t>> stack{{flows.root(), 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const Flow& f = flows.at(id);
    out.append(depth * 2, ' ');
    out += f.kind == FlowKind::kBlock ? "block " : "inline ";
    out += f.dom_origin ? std::to_string(f.dom_origin->value) : "anon";
    if (f.kind == FlowKind::kInline) {
      out += " [";
      for (std::size_t i = 0; i < f.fragments.size(); ++i) {
        if (i > 0) out += ", ";
        std::visit(Overloaded{
                       [&](const TextFragment& t) { out += "text \"" + escape_text(t.text) + "\""; },
                       [&](const MarkerFragment& m) { out += "marker \"" + escape_text(m.glyph) + "\""; },
                   },
                   f.fragments[i]);
      }
      out += "]";
    }
    out += '\n';
    for (std::size_t i = f.children.size(); i-- > 0;) stack.push_back({f.children[i], depth + 1});
  }
  return out;
}

}  // namespace weft
