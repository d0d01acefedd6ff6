#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weft/base/error.h"
#include "weft/dom/dom_tree.h"

namespace weft {

enum class StyleErrc { kNotAnElement, kBadSelector };
using StyleError = CodedError<StyleErrc>;

struct Specificity {
  int ids = 0;
  int classes = 0;
  int types = 0;

  friend auto operator<=>(const Specificity&, const Specificity&) = default;
  friend Specificity operator+(Specificity a, Specificity b) {
    return {a.ids + b.ids, a.classes + b.classes, a.types + b.types};
  }
};

struct CompoundSelector {
  std::optional<std::string> type;  // absent means universal
  std::vector<std::string> classes;
  std::optional<std::string> id;

  friend bool operator==(const CompoundSelector&, const CompoundSelector&) = default;
};

enum class Combinator { kDescendant, kChild };

// compounds.back() is the subject; combinators[i] joins compounds[i] and
// compounds[i + 1].
struct Selector {
  std::vector<CompoundSelector> compounds;
  std::vector<Combinator> combinators;

  friend bool operator==(const Selector&, const Selector&) = default;
};

// Throws StyleError(kBadSelector) on anything outside the supported subset.
Selector parse_selector(std::string_view text);
std::string to_string(const Selector& selector);

Specificity specificity(const Selector& selector);
Specificity specificity(const CompoundSelector& compound);

bool matches_compound(const CompoundSelector& compound, const ElementData& element);

// Right-to-left match of `selector` against element `node`.
bool matches(const Selector& selector, NodeId node, const DomTree& tree);

}  // namespace weft
