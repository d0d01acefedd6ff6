#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weft/style/selector.h"
#include "weft/style/values.h"

namespace weft {

struct Rule {
  Selector selector;
  std::vector<Declaration> declarations;
  std::size_t source_order = 0;
};

struct ParsedDeclarations {
  std::vector<Declaration> declarations;
  std::vector<std::string> diagnostics;
};

struct ParsedStylesheet {
  std::vector<Rule> rules;
  std::vector<std::string> diagnostics;
};

// Body of a rule or of a style="" attribute. Invalid declarations are
// skipped up to the next ';' and reported.
ParsedDeclarations parse_declarations(std::string_view text);

// Each selector of a selector list becomes its own Rule; source_order
// counts up from `first_source_order`. A rule with an invalid selector is
// dropped whole. At-rules are skipped.
ParsedStylesheet parse_stylesheet(std::string_view text, std::size_t first_source_order = 0);

}  // namespace weft
