#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weft/base/error.h"
#include "weft/tokenizer/token.h"

namespace weft {

struct NodeId {
  std::uint32_t value = 0;

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct DocumentData {
  friend bool operator==(const DocumentData&, const DocumentData&) = default;
};

struct ElementData {
  std::string name;
  std::vector<Attribute> attributes;

  const std::string* attribute(std::string_view attribute_name) const;

  friend bool operator==(const ElementData&, const ElementData&) = default;
};

struct TextData {
  std::string data;

  friend bool operator==(const TextData&, const TextData&) = default;
};

struct CommentData {
  std::string text;

  friend bool operator==(const CommentData&, const CommentData&) = default;
};

using NodeKind = std::variant<DocumentData, ElementData, TextData, CommentData>;

struct DomNode {
  NodeId id;
  NodeKind kind;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;

  bool is_element() const { return std::holds_alternative<ElementData>(kind); }
  bool is_text() const { return std::holds_alternative<TextData>(kind); }
};

enum class DomErrc { kNoSuchNode, kNotAnElement, kInvalidParent, kInvalidChild, kCannotRemoveRoot, kInconsistent };
using DomError = CodedError<DomErrc>;

// Document tree addressed by NodeId. Ids are never reused: removed nodes
// leave a tombstone. Every mutation bumps generation().
class DomTree {
 public:
  DomTree();

  NodeId root() const { return NodeId{0}; }
  std::uint64_t generation() const { return generation_; }

  bool contains(NodeId id) const;
  const DomNode& node(NodeId id) const;
  const ElementData* element(NodeId id) const;
  const ElementData& element_or_throw(NodeId id) const;

  // Upper bound on NodeId values handed out so far.
  std::size_t id_capacity() const { return nodes_.size(); }
  std::size_t live_count() const { return live_; }

  void set_attribute(NodeId id, std::string_view name, std::string_view value);
  NodeId append_child(NodeId parent, NodeKind kind);
  void remove_node(NodeId id);

  // Appends to the parent's trailing Text child, or creates one.
  NodeId append_text(NodeId parent, std::string_view text);

  // Live nodes in document order (pre-order from the root).
  std::vector<NodeId> preorder() const;

  // Resolves slash-separated child indices from the root: "" or "/" is the
  // root, "0/2" the third child of the root's first child.
  std::optional<NodeId> resolve_path(std::string_view path) const;
  std::string path_of(NodeId id) const;

  // Throws DomError(kInconsistent) if parent/child links disagree, a Text
  // node has children, or a node is unreachable from the root.
  void audit() const;

 private:
  DomNode& mutable_node(NodeId id);

  std::vector<std::optional<DomNode>> nodes_;
  std::uint64_t generation_ = 0;
  std::size_t live_ = 0;
};

}  // namespace weft
