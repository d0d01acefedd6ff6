#include "weft/engine/page.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "weft/base/overloaded.h"
#include "weft/engine/document_parser.h"
#include "weft/flow/builder.h"

namespace weft {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EngineError(EngineErrc::kIo, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw EngineError(EngineErrc::kIo, "error reading " + path);
  return buffer.str();
}

std::vector<Rule> collect_rules(const DomTree& tree, std::span<const std::string> css_texts,
                                std::vector<std::string>* diagnostics) {
  std::vector<Rule> rules;
  auto add = [&](std::string_view text) {
    ParsedStylesheet sheet = parse_stylesheet(text, rules.size());
    for (auto& rule : sheet.rules) rules.push_back(std::move(rule));
    if (diagnostics) {
      for (auto& d : sheet.diagnostics) diagnostics->push_back(std::move(d));
    }
  };
  for (const std::string& css : css_texts) add(css);
  for (NodeId id : tree.preorder()) {
    const ElementData* e = tree.element(id);
    if (!e || e->name != "style") continue;
    std::string text;
    for (NodeId child : tree.node(id).children) {
      if (const auto* t = std::get_if<TextData>(&tree.node(child).kind)) text += t->data;
    }
    add(text);
  }
  return rules;
}

void rebuild_all(Page& page, const LayoutOptions& options) {
  page.rules = collect_rules(page.dom, page.css_texts, &page.diagnostics);
  page.styles = compute_styles(page.dom, page.rules, options.traversal);
  page.flows = build_flow_tree(page.dom, page.styles);
  layout(page.flows, options);
}

Page build_page(DomTree dom, std::vector<std::string> css_texts, const LayoutOptions& options) {
  Page page;
  page.dom = std::move(dom);
  page.css_texts = std::move(css_texts);
  rebuild_all(page, options);
  return page;
}

Page load_page(std::string_view html, std::vector<std::string> css_texts, const LayoutOptions& options) {
  ParsedDocument parsed = parse_document(html);
  Page page = build_page(std::move(parsed.tree), std::move(css_texts), options);
  page.diagnostics.insert(page.diagnostics.begin(), parsed.diagnostics.begin(), parsed.diagnostics.end());
  if (!parsed.deferred_commands.empty()) {
    MutationOutcome outcome = apply_mutations(page, parsed.deferred_commands);
    for (auto& d : outcome.diagnostics) page.diagnostics.push_back(std::move(d));
    incremental_relayout(page.flows, options);
  }
  return page;
}

namespace {

NodeId resolve(const DomTree& tree, const std::string& path) {
  auto id = tree.resolve_path(path);
  if (!id) throw EngineError(EngineErrc::kBadPath, "path " + path + " does not name a node");
  return *id;
}

bool inside_style_element(const DomTree& tree, NodeId id) {
  std::optional<NodeId> current = id;
  while (current) {
    const ElementData* e = tree.element(*current);
    if (e && e->name == "style") return true;
    current = tree.node(*current).parent;
  }
  return false;
}

// Nearest block flow generated by `from` or one of its ancestors.
std::optional<FlowId> enclosing_block(const Page& page, NodeId from) {
  std::optional<NodeId> current = from;
  while (current) {
    if (auto flow = page.flows.block_for(*current)) return flow;
    current = page.dom.node(*current).parent;
  }
  return std::nullopt;
}

// Styles of `root` and its element descendants in document order.
std::vector<std::optional<ComputedStyle>> subtree_styles(const Page& page, NodeId root) {
  std::vector<std::optional<ComputedStyle>> out;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const DomNode& n = page.dom.node(id);
    if (!n.is_element()) continue;
    const ComputedStyle* style = page.styles.find(id);
    out.push_back(style ? std::optional<ComputedStyle>(*style) : std::nullopt);
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

void mark_ancestors_dirty(FlowTree& flows, FlowId id) {
  std::optional<FlowId> up = flows.at(id).parent;
  while (up) {
    flows.at(*up).descendant_dirty = true;
    up = flows.at(*up).parent;
  }
}

void mark_all_dirty(FlowTree& flows) {
  for (FlowId id : flows.preorder()) flows.at(id).self_dirty = true;
}

}  // namespace

MutationOutcome apply_mutations(Page& page, std::span<const ScriptCommand> commands) {
  MutationOutcome outcome;
  bool restyle_everything = false;
  // Flows to rebuild; nullopt requests a full rebuild.
  std::vector<std::optional<NodeId>> rebuild_at;

  for (const ScriptCommand& command : commands) {
    std::visit(
        Overloaded{
            [&](const WriteCommand&) {
              outcome.diagnostics.push_back("write ignored outside of parsing");
            },
            [&](const SetAttributeCommand& c) {
              NodeId id = resolve(page.dom, c.path);
              auto block = page.flows.block_for(id);
              auto before = subtree_styles(page, id);
              page.dom.set_attribute(id, c.name, c.value);
              if (inside_style_element(page.dom, id)) restyle_everything = true;
              restyle_subtree(page.dom, page.rules, id, page.styles);
              auto after = subtree_styles(page, id);
              bool block_level = after.front() && after.front()->is_block_level();
              // Text directly inside the element carries its font size and color.
              if (block && block_level && before.front()->display == after.front()->display &&
                  before.front()->font_size == after.front()->font_size &&
                  before.front()->color == after.front()->color &&
                  std::equal(before.begin() + 1, before.end(), after.begin() + 1, after.end())) {
                // Only this block's own box changed.
                Flow& flow = page.flows.at(*block);
                flow.style = *after.front();
                flow.self_dirty = true;
                mark_ancestors_dirty(page.flows, *block);
              } else if (block && block_level) {
                rebuild_at.emplace_back(id);
              } else {
                const auto& parent = page.dom.node(id).parent;
                rebuild_at.push_back(parent ? std::optional<NodeId>(*parent) : std::nullopt);
              }
            },
            [&](const AppendChildCommand& c) {
              NodeId parent = resolve(page.dom, c.parent_path);
              std::visit(Overloaded{
                             [&](const ElementPayload& p) {
                               NodeId child = page.dom.append_child(parent, ElementData{p.name, {}});
                               restyle_subtree(page.dom, page.rules, child, page.styles);
                             },
                             [&](const TextPayload& p) { page.dom.append_child(parent, TextData{p.data}); },
                         },
                         c.payload);
              if (inside_style_element(page.dom, parent)) restyle_everything = true;
              rebuild_at.emplace_back(parent);
            },
            [&](const RemoveNodeCommand& c) {
              NodeId id = resolve(page.dom, c.path);
              bool styled = inside_style_element(page.dom, id);
              auto parent = page.dom.node(id).parent;
              page.dom.remove_node(id);
              if (styled) restyle_everything = true;
              rebuild_at.push_back(parent);
            },
        },
        command);
  }

  bool full = restyle_everything;
  if (!full) {
    // Rebuild after all DOM edits so every rebuild sees the final tree.
    for (const auto& at : rebuild_at) {
      if (!at || !page.dom.contains(*at)) {
        // A removed node's enclosing block is found from its surviving parent
        // recorded by a later command; a dead anchor means an ancestor went
        // away, which another entry already covers.
        if (!at) full = true;
        continue;
      }
      auto block = enclosing_block(page, *at);
      if (!block) {
        full = true;
        break;
      }
      rebuild_flow_children(page.flows, *block, page.dom, page.styles);
    }
  }
  if (full) {
    if (restyle_everything) {
      page.rules = collect_rules(page.dom, page.css_texts, &outcome.diagnostics);
      page.styles = compute_styles(page.dom, page.rules);
    }
    page.flows = build_flow_tree(page.dom, page.styles);
    mark_all_dirty(page.flows);
    outcome.full_rebuild = true;
  }
  for (FlowId id : page.flows.preorder()) {
    if (page.flows.at(id).self_dirty) outcome.dirtied.push_back(id);
  }
  return outcome;
}

LayoutStats incremental_relayout(FlowTree& flows, const LayoutOptions& options) {
  LayoutStats stats;
  if (flows.empty()) return stats;
  FlowTree::Indexed indexed = flows.indexed();
  const auto& order = indexed.order;
  std::vector<char> dirty(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Flow& f = flows.at(order[i]);
    dirty[i] = f.self_dirty || f.descendant_dirty;
  }
  bool viewport_changed = flows.laid_out_viewport != options.viewport_width;
  std::vector<char> width_visited(order.size(), 0);

  stats.intrinsic = execute_traversal(
      indexed.shape, TraversalDirection::kBottomUp,
      [&](std::uint32_t i) { compute_intrinsic_width(flows, order[i]); }, options.traversal,
      [&](std::uint32_t i) { return dirty[i] != 0; });
  stats.widths = execute_traversal(
      indexed.shape, TraversalDirection::kTopDown,
      [&](std::uint32_t i) {
        assign_width(flows, order[i], options.viewport_width);
        width_visited[i] = 1;
      },
      options.traversal,
      [&](std::uint32_t i) {
        if (dirty[i]) return true;
        if (i == 0) return viewport_changed;
        return flows.at(order[indexed.shape.parent(i)]).metrics.children_inputs_changed;
      });
  stats.heights = execute_traversal(
      indexed.shape, TraversalDirection::kBottomUp,
      [&](std::uint32_t i) { compute_height(flows, order[i]); }, options.traversal,
      [&](std::uint32_t i) { return dirty[i] || width_visited[i]; });
  for (FlowId id : order) {
    flows.at(id).self_dirty = false;
    flows.at(id).descendant_dirty = false;
  }
  flows.laid_out_viewport = options.viewport_width;
  return stats;
}

}  // namespace weft
