#pragma once

#include <string>

#include "weft/dom/dom_tree.h"

namespace weft {

// Canonical HTML: lowercase names, double-quoted attributes, escaped text,
// no end tags for void elements.
std::string serialize_html(const DomTree& tree);

// Indented debug dump, two spaces per level.
std::string dump_dom(const DomTree& tree);

}  // namespace weft
