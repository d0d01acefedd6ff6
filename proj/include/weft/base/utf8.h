#pragma once

#include <string>
#include <string_view>

namespace weft {

inline constexpr char32_t kReplacementCharacter = 0xFFFD;

// Invalid sequences decode to U+FFFD, one per offending byte.
std::u32string utf8_decode(std::string_view bytes);

void utf8_append(std::string& out, char32_t ch);
std::string utf8_encode(std::u32string_view text);

}  // namespace weft
