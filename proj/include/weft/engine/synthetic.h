#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace weft {

struct SyntheticPageOptions {
  std::size_t elements = 10000;  // block elements below body
  std::size_t branching = 8;     // maximum children per block
  std::uint64_t seed = 1;
  bool random_shape = false;     // random fan-out in [1, branching] instead of full
};

// A page of nested divs with short text in every leaf block plus a few
// inline spans and list items. The fixed shape is a complete tree of the
// given branching factor in breadth-first order.
std::string synthetic_page(const SyntheticPageOptions& options);

// A stylesheet exercising classes, ids, descendant and child selectors on
// synthetic pages.
std::string synthetic_stylesheet();

}  // namespace weft
