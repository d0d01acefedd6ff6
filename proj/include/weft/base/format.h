#pragma once

#include <string>
#include <string_view>

namespace weft {

// Fixed two-decimal rendering used by every geometry dump. Rounds the exact
// binary value half-to-even and never prints "-0.00".
std::string format_px(double value);

// Backslash-escapes control characters, backslashes and double quotes.
std::string escape_text(std::string_view text);

}  // namespace weft
