#pragma once

#include <random>
#include <vector>

#include "weft/dom/dom_tree.h"
#include "weft/engine/script.h"

namespace weft::testing {

// Up to `max_commands` random set/append/remove commands that are valid
// when applied in order starting from `tree` (paths refer to the tree as it
// is after the earlier commands).
std::vector<ScriptCommand> random_mutations(std::mt19937_64& rng, const DomTree& tree, std::size_t max_commands);

// Applies the commands straight to a DomTree, as a reference for the
// engine's mutation path.
void apply_to_dom(DomTree& tree, const std::vector<ScriptCommand>& commands);

}  // namespace weft::testing
