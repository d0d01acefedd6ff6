#include "weft/dom/dom_tree.h"

#include <algorithm>
#include <charconv>

namespace weft {

const std::string* ElementData::attribute(std::string_view attribute_name) const {
  for (const auto& a : attributes) {
    if (a.name == attribute_name) return &a.value;
  }
  return nullptr;
}

DomTree::DomTree() {
  nodes_.emplace_back(DomNode{NodeId{0}, DocumentData{}, std::nullopt, {}});
  live_ = 1;
}

bool DomTree::contains(NodeId id) const {
  return id.value < nodes_.size() && nodes_[id.value].has_value();
}

const DomNode& DomTree::node(NodeId id) const {
  if (!contains(id)) {
    throw DomError(DomErrc::kNoSuchNode, "no such node: " + std::to_string(id.value));
  }
  return *nodes_[id.value];
}

DomNode& DomTree::mutable_node(NodeId id) {
  if (!contains(id)) {
    throw DomError(DomErrc::kNoSuchNode, "no such node: " + std::to_string(id.value));
  }
  return *nodes_[id.value];
}

const ElementData* DomTree::element(NodeId id) const {
  if (!contains(id)) return nullptr;
  return std::get_if<ElementData>(&nodes_[id.value]->kind);
}

const ElementData& DomTree::element_or_throw(NodeId id) const {
  const auto* e = std::get_if<ElementData>(&node(id).kind);
  if (!e) throw DomError(DomErrc::kNotAnElement, "node " + std::to_string(id.value) + " is not an element");
  return *e;
}

void DomTree::set_attribute(NodeId id, std::string_view name, std::string_view value) {
  auto* e = std::get_if<ElementData>(&mutable_node(id).kind);
  if (!e) throw DomError(DomErrc::kNotAnElement, "node " + std::to_string(id.value) + " is not an element");
  auto it = std::find_if(e->attributes.begin(), e->attributes.end(),
                         [&](const Attribute& a) { return a.name == name; });
  if (it != e->attributes.end()) {
    it->value = std::string(value);
  } else {
    e->attributes.push_back(Attribute{std::string(name), std::string(value)});
  }
  ++generation_;
}

NodeId DomTree::append_child(NodeId parent, NodeKind kind) {
  DomNode& p = mutable_node(parent);
  if (p.is_text() || std::holds_alternative<CommentData>(p.kind)) {
    throw DomError(DomErrc::kInvalidParent, "node " + std::to_string(parent.value) + " cannot have children");
  }
  if (std::holds_alternative<DocumentData>(kind)) {
    throw DomError(DomErrc::kInvalidChild, "a document node cannot be appended");
  }
  NodeId id{static_cast<std::uint32_t>(nodes_.size())};
  p.children.push_back(id);
  nodes_.emplace_back(DomNode{id, std::move(kind), parent, {}});
  ++live_;
  ++generation_;
  return id;
}

NodeId DomTree::append_text(NodeId parent, std::string_view text) {
  DomNode& p = mutable_node(parent);
  if (!p.children.empty()) {
    DomNode& last = *nodes_[p.children.back().value];
    if (auto* t = std::get_if<TextData>(&last.kind)) {
      t->data.append(text);
      ++generation_;
      return last.id;
    }
  }
  return append_child(parent, TextData{std::string(text)});
}

void DomTree::remove_node(NodeId id) {
  DomNode& target = mutable_node(id);
  if (!target.parent) throw DomError(DomErrc::kCannotRemoveRoot, "cannot remove the document root");
  auto& siblings = mutable_node(*target.parent).children;
  siblings.erase(std::find(siblings.begin(), siblings.end(), id));
  std::vector<NodeId> pending{id};
  while (!pending.empty()) {
    NodeId current = pending.back();
    pending.pop_back();
    for (NodeId child : nodes_[current.value]->children) pending.push_back(child);
    nodes_[current.value].reset();
    --live_;
  }
  ++generation_;
}

std::vector<NodeId> DomTree::preorder() const {
  std::vector<NodeId> out;
  out.reserve(live_);
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    NodeId current = stack.back();
    stack.pop_back();
    out.push_back(current);
    const auto& children = nodes_[current.value]->children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::optional<NodeId> DomTree::resolve_path(std::string_view path) const {
  NodeId current = root();
  if (!path.empty() && path.front() == '/') path.remove_prefix(1);
  while (!path.empty()) {
    auto slash = path.find('/');
    std::string_view part = path.substr(0, slash);
    std::size_t index = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), index);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty()) return std::nullopt;
    const auto& children = nodes_[current.value]->children;
    if (index >= children.size()) return std::nullopt;
    current = children[index];
    path = slash == std::string_view::npos ? std::string_view() : path.substr(slash + 1);
  }
  return current;
}

std::string DomTree::path_of(NodeId id) const {
  std::vector<std::size_t> indices;
  const DomNode* current = &node(id);
  while (current->parent) {
    const auto& siblings = nodes_[current->parent->value]->children;
    indices.push_back(static_cast<std::size_t>(
        std::find(siblings.begin(), siblings.end(), current->id) - siblings.begin()));
    current = &*nodes_[current->parent->value];
  }
  std::string out;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    if (!out.empty()) out.push_back('/');
    out += std::to_string(*it);
  }
  return out;
}

void DomTree::audit() const {
  auto fail = [](const std::string& what) { throw DomError(DomErrc::kInconsistent, what); };
  if (!contains(root()) || nodes_[0]->parent) fail("root missing or parented");
  std::size_t reached = 0;
  std::vector<NodeId> stack{root()};
  std::vector<bool> seen(nodes_.size(), false);
  while (!stack.empty()) {
    NodeId current = stack.back();
    stack.pop_back();
    if (seen[current.value]) fail("cycle or shared child at " + std::to_string(current.value));
    seen[current.value] = true;
    ++reached;
    const DomNode& n = *nodes_[current.value];
    if (n.id != current) fail("id mismatch at " + std::to_string(current.value));
    if ((n.is_text() || std::holds_alternative<CommentData>(n.kind)) && !n.children.empty()) {
      fail("leaf node with children at " + std::to_string(current.value));
    }
    if (current != root() && std::holds_alternative<DocumentData>(n.kind)) fail("nested document node");
    for (NodeId child : n.children) {
      if (!contains(child)) fail("dangling child " + std::to_string(child.value));
      if (nodes_[child.value]->parent != current) fail("parent link mismatch at " + std::to_string(child.value));
      stack.push_back(child);
    }
  }
  if (reached != live_) fail("unreachable live nodes");
}

}  // namespace weft
