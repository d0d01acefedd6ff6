#include "weft/style/selector.h"

#include <cctype>

namespace weft {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw StyleError(StyleErrc::kBadSelector, "bad selector '" + std::string(text) + "': " + why);
}

bool has_class(const ElementData& element, std::string_view name) {
  const std::string* attr = element.attribute("class");
  if (!attr) return false;
  std::string_view rest = *attr;
  while (!rest.empty()) {
    std::size_t start = 0;
    while (start < rest.size() && is_space(rest[start])) ++start;
    std::size_t end = start;
    while (end < rest.size() && !is_space(rest[end])) ++end;
    if (end > start && rest.substr(start, end - start) == name) return true;
    rest.remove_prefix(end);
  }
  return false;
}

bool match_from(const Selector& selector, std::size_t index, NodeId node, const DomTree& tree) {
  const ElementData* element = tree.element(node);
  if (!element || !matches_compound(selector.compounds[index], *element)) return false;
  if (index == 0) return true;
  Combinator combinator = selector.combinators[index - 1];
  std::optional<NodeId> ancestor = tree.node(node).parent;
  while (ancestor && tree.element(*ancestor)) {
    if (match_from(selector, index - 1, *ancestor, tree)) return true;
    if (combinator == Combinator::kChild) return false;
    ancestor = tree.node(*ancestor).parent;
  }
  return false;
}

}  // namespace

Selector parse_selector(std::string_view text) {
  Selector out;
  std::size_t i = 0;
  std::optional<Combinator> pending;
  auto skip_space = [&] {
    bool any = false;
    while (i < text.size() && is_space(text[i])) {
      ++i;
      any = true;
    }
    return any;
  };
  auto read_name = [&] {
    std::size_t start = i;
    while (i < text.size() && is_name_char(text[i])) ++i;
    if (i == start) bad(text, "expected a name");
    return std::string(text.substr(start, i - start));
  };
  skip_space();
  while (i < text.size()) {
    if (!out.compounds.empty()) {
      bool spaced = skip_space();
      if (i == text.size()) break;
      if (text[i] == '>') {
        ++i;
        skip_space();
        pending = Combinator::kChild;
      } else if (spaced) {
        pending = Combinator::kDescendant;
      } else {
        bad(text, "unexpected character");
      }
      out.combinators.push_back(*pending);
    }
    CompoundSelector compound;
    bool any = false;
    if (i < text.size() && text[i] == '*') {
      ++i;
      any = true;
    } else if (i < text.size() && is_name_char(text[i])) {
      std::string name = read_name();
      for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      compound.type = std::move(name);
      any = true;
    }
    while (i < text.size() && (text[i] == '.' || text[i] == '#')) {
      char sigil = text[i++];
      std::string name = read_name();
      if (sigil == '.') {
        compound.classes.push_back(std::move(name));
      } else {
        if (compound.id) bad(text, "more than one id in a compound");
        compound.id = std::move(name);
      }
      any = true;
    }
    if (!any) bad(text, "empty compound");
    out.compounds.push_back(std::move(compound));
  }
  if (out.compounds.empty()) bad(text, "empty selector");
  return out;
}

std::string to_string(const Selector& selector) {
  std::string out;
  for (std::size_t i = 0; i < selector.compounds.size(); ++i) {
    if (i > 0) out += selector.combinators[i - 1] == Combinator::kChild ? " > " : " ";
    const auto& c = selector.compounds[i];
    bool bare = !c.type && c.classes.empty() && !c.id;
    if (c.type) out += *c.type;
    if (bare) out += '*';
    for (const auto& cls : c.classes) out += "." + cls;
    if (c.id) out += "#" + *c.id;
  }
  return out;
}

Specificity specificity(const CompoundSelector& compound) {
  return {compound.id ? 1 : 0, static_cast<int>(compound.classes.size()), compound.type ? 1 : 0};
}

Specificity specificity(const Selector& selector) {
  Specificity total;
  for (const auto& c : selector.compounds) total = total + specificity(c);
  return total;
}

bool matches_compound(const CompoundSelector& compound, const ElementData& element) {
  if (compound.type && *compound.type != element.name) return false;
  if (compound.id) {
    const std::string* id = element.attribute("id");
    if (!id || *id != *compound.id) return false;
  }
  for (const auto& cls : compound.classes) {
    if (!has_class(element, cls)) return false;
  }
  return true;
}

bool matches(const Selector& selector, NodeId node, const DomTree& tree) {
  if (!tree.element(node)) {
    throw StyleError(StyleErrc::kNotAnElement, "node " + std::to_string(node.value) + " is not an element");
  }
  return match_from(selector, selector.compounds.size() - 1, node, tree);
}

}  // namespace weft
