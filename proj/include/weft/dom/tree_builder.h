#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weft/dom/dom_tree.h"
#include "weft/tokenizer/token.h"

namespace weft {

// Builds a DomTree from tokens with a small recovery subset:
//   - at end of stream every open element is closed;
//   - an end tag with no matching open element is ignored;
//   - an end tag matching a non-innermost open element closes everything
//     opened after it;
//   - content arriving before <html>/<body> synthesizes them.
// Whitespace before the body exists is dropped; elsewhere it is kept.
class TreeBuilder {
 public:
  // Returns the script's text when `token` closes a <script> element, so
  // the caller can run it before tokenizing further.
  std::optional<std::string> process(const Token& token);

  bool finished() const { return finished_; }
  const DomTree& tree() const { return tree_; }
  DomTree take() { return std::move(tree_); }

 private:
  NodeId current() const { return open_.empty() ? tree_.root() : open_.back(); }
  void ensure_html();
  void ensure_body();
  void insert_element(const StartTag& tag);
  std::optional<std::string> close_element(const std::string& name);
  void close_all();

  DomTree tree_;
  std::vector<NodeId> open_;
  std::optional<NodeId> html_;
  std::optional<NodeId> body_;
  bool finished_ = false;
};

DomTree build_dom(std::span<const Token> tokens);

bool is_void_element(std::string_view name);

}  // namespace weft
