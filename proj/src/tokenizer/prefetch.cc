#include "weft/tokenizer/prefetch.h"

#include "weft/base/utf8.h"

namespace weft {

namespace {

bool is_space(char32_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\r'; }

char32_t lower(char32_t c) { return (c >= 'A' && c <= 'Z') ? c + 0x20 : c; }

bool is_name_char(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

}  // namespace

std::vector<std::string> scan_prefetch(std::u32string_view text) {
  std::vector<std::string> urls;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    ++i;
    std::u32string name;
    while (i < n && is_name_char(text[i])) name.push_back(lower(text[i++]));
    std::u32string wanted;
    if (name == U"img" || name == U"script") {
      wanted = U"src";
    } else if (name == U"link") {
      wanted = U"href";
    } else {
      continue;
    }
    // Attribute scan up to the closing '>'.
    while (i < n && text[i] != '>') {
      if (is_space(text[i]) || text[i] == '/') {
        ++i;
        continue;
      }
      std::u32string attr;
      while (i < n && !is_space(text[i]) && text[i] != '=' && text[i] != '>' && text[i] != '/') {
        attr.push_back(lower(text[i++]));
      }
      while (i < n && is_space(text[i])) ++i;
      if (i >= n || text[i] != '=') continue;
      ++i;
      while (i < n && is_space(text[i])) ++i;
      std::u32string value;
      if (i < n && (text[i] == '"' || text[i] == '\'')) {
        char32_t quote = text[i++];
        while (i < n && text[i] != quote) value.push_back(text[i++]);
        if (i < n) ++i;
      } else {
        while (i < n && !is_space(text[i]) && text[i] != '>') value.push_back(text[i++]);
      }
      if (attr == wanted && !value.empty()) urls.push_back(utf8_encode(value));
    }
  }
  return urls;
}

std::vector<std::string> scan_prefetch(std::string_view pending_utf8) {
  return scan_prefetch(utf8_decode(pending_utf8));
}

}  // namespace weft
