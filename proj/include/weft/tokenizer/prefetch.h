#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weft {

// Speculative resource scan over not-yet-tokenized input. Finds src of
// <img>/<script> and href of <link> in document order. It ignores comment and
// script context, so it may report resources the parser never loads, but it
// does not miss any on well-formed markup outside comments.
std::vector<std::string> scan_prefetch(std::u32string_view pending);
std::vector<std::string> scan_prefetch(std::string_view pending_utf8);

}  // namespace weft
