#include "weft/dom/tree_builder.h"

#include <algorithm>
#include <array>

#include "weft/base/overloaded.h"
#include "weft/base/utf8.h"

namespace weft {

namespace {

bool is_space(char32_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\r'; }

}  // namespace

bool is_void_element(std::string_view name) {
  static constexpr std::array<std::string_view, 14> kVoid = {
      "area", "base", "br", "col", "embed", "hr", "img", "input",
      "link", "meta", "param", "source", "track", "wbr"};
  return std::find(kVoid.begin(), kVoid.end(), name) != kVoid.end();
}

std::optional<std::string> TreeBuilder::process(const Token& token) {
  if (finished_) return std::nullopt;
  return std::visit(
      Overloaded{
          [&](const StartTag& tag) -> std::optional<std::string> {
            if (tag.name == "html") {
              if (!html_) {
                html_ = tree_.append_child(tree_.root(), ElementData{tag.name, tag.attributes});
                open_.push_back(*html_);
              }
              return std::nullopt;
            }
            if (tag.name == "body") {
              if (!body_) {
                ensure_html();
                body_ = tree_.append_child(*html_, ElementData{tag.name, tag.attributes});
                open_.push_back(*body_);
              }
              return std::nullopt;
            }
            ensure_body();
            insert_element(tag);
            return std::nullopt;
          },
          [&](const EndTag& tag) -> std::optional<std::string> {
            if (tag.name == "html" || tag.name == "body") return std::nullopt;
            return close_element(tag.name);
          },
          [&](const Character& c) -> std::optional<std::string> {
            if (!body_ && is_space(c.ch)) return std::nullopt;
            ensure_body();
            std::string text;
            utf8_append(text, c.ch);
            tree_.append_text(current(), text);
            return std::nullopt;
          },
          [&](const Comment& c) -> std::optional<std::string> {
            tree_.append_child(current(), CommentData{c.text});
            return std::nullopt;
          },
          [&](const Doctype&) -> std::optional<std::string> { return std::nullopt; },
          [&](const EndOfStream&) -> std::optional<std::string> {
            close_all();
            finished_ = true;
            return std::nullopt;
          },
      },
      token);
}

void TreeBuilder::ensure_html() {
  if (html_) return;
  html_ = tree_.append_child(tree_.root(), ElementData{"html", {}});
  open_.push_back(*html_);
}

void TreeBuilder::ensure_body() {
  if (body_) return;
  ensure_html();
  body_ = tree_.append_child(*html_, ElementData{"body", {}});
  open_.push_back(*body_);
}

void TreeBuilder::insert_element(const StartTag& tag) {
  NodeId id = tree_.append_child(current(), ElementData{tag.name, tag.attributes});
  if (!tag.self_closing && !is_void_element(tag.name)) open_.push_back(id);
}

std::optional<std::string> TreeBuilder::close_element(const std::string& name) {
  // html and body stay open until end of stream.
  auto floor = static_cast<std::ptrdiff_t>(std::min<std::size_t>(open_.size(), 2));
  auto match = std::find_if(open_.rbegin(), open_.rend() - floor, [&](NodeId id) {
    return tree_.element(id)->name == name;
  });
  if (match == open_.rend() - floor) return std::nullopt;
  NodeId closed = *match;
  open_.erase(std::prev(match.base()), open_.end());
  if (name != "script") return std::nullopt;
  std::string text;
  for (NodeId child : tree_.node(closed).children) {
    if (const auto* t = std::get_if<TextData>(&tree_.node(child).kind)) text += t->data;
  }
  return text;
}

void TreeBuilder::close_all() { open_.clear(); }

DomTree build_dom(std::span<const Token> tokens) {
  TreeBuilder builder;
  for (const Token& token : tokens) builder.process(token);
  if (!builder.finished()) builder.process(EndOfStream{});
  return builder.take();
}

}  // namespace weft
