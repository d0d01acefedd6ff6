#pragma once

#include <random>
#include <string>

#include "weft/dom/dom_tree.h"

namespace weft::testing {

// Document -> html -> random elements (tags div/p/span/a, classes from
// x/y/z, occasional ids).
DomTree random_element_tree(std::mt19937_64& rng, std::size_t elements);

// Source text of a random selector of 1..3 compounds.
std::string random_selector_text(std::mt19937_64& rng);

// Brute force: tries every way of assigning the selector's compounds to the
// element and its ancestors and checks each assignment directly.
bool oracle_matches(const std::string& selector_text, NodeId node, const DomTree& tree);

}  // namespace weft::testing
