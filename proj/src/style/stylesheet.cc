#include "weft/style/stylesheet.h"

#include <array>
#include <cctype>

namespace weft {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 2, "/*") == 0) {
      std::size_t end = text.find("*/", i + 2);
      i = end == std::string_view::npos ? text.size() : end + 2;
      out.push_back(' ');
    } else {
      out.push_back(text[i++]);
    }
  }
  return out;
}

std::vector<std::string_view> split_space(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  return parts;
}

bool non_negative(const Length& l) { return l.value >= 0; }

// Returns false when the value is invalid for the property.
bool parse_value(std::string_view name, std::string_view value, std::vector<Declaration>& out) {
  if (name == "display") {
    auto d = parse_display(value);
    if (!d) return false;
    out.push_back({Property::kDisplay, *d});
    return true;
  }
  if (name == "width" || name == "height") {
    Property p = name == "width" ? Property::kWidth : Property::kHeight;
    if (lower(value) == "auto") {
      out.push_back({p, Auto{}});
      return true;
    }
    auto l = parse_length(value);
    if (!l || !non_negative(*l)) return false;
    out.push_back({p, *l});
    return true;
  }
  if (name == "color" || name == "background-color") {
    auto c = parse_color(value);
    if (!c) return false;
    out.push_back({name == "color" ? Property::kColor : Property::kBackgroundColor, *c});
    return true;
  }
  if (name == "font-size") {
    auto l = parse_length(value);
    if (!l || l->value <= 0) return false;
    out.push_back({Property::kFontSize, *l});
    return true;
  }
  static constexpr std::array<std::string_view, 4> kSides = {"top", "right", "bottom", "left"};
  for (int box = 0; box < 2; ++box) {
    std::string_view prefix = box == 0 ? "margin" : "padding";
    Property first = box == 0 ? Property::kMarginTop : Property::kPaddingTop;
    if (name.substr(0, prefix.size()) != prefix) continue;
    std::string_view rest = name.substr(prefix.size());
    if (rest.empty()) {
      auto parts = split_space(value);
      if (parts.empty() || parts.size() > 4) return false;
      std::vector<Length> lengths;
      for (auto part : parts) {
        auto l = parse_length(part);
        if (!l || !non_negative(*l)) return false;
        lengths.push_back(*l);
      }
      // top right bottom left, with the usual 1-4 value expansion.
      std::array<std::size_t, 4> pick{};
      switch (lengths.size()) {
        case 1: pick = {0, 0, 0, 0}; break;
        case 2: pick = {0, 1, 0, 1}; break;
        case 3: pick = {0, 1, 2, 1}; break;
        default: pick = {0, 1, 2, 3}; break;
      }
      for (std::size_t side = 0; side < 4; ++side) {
        out.push_back({static_cast<Property>(static_cast<int>(first) + side), lengths[pick[side]]});
      }
      return true;
    }
    for (std::size_t side = 0; side < 4; ++side) {
      if (rest.size() == kSides[side].size() + 1 && rest[0] == '-' && rest.substr(1) == kSides[side]) {
        auto l = parse_length(value);
        if (!l || !non_negative(*l)) return false;
        out.push_back({static_cast<Property>(static_cast<int>(first) + side), *l});
        return true;
      }
    }
  }
  return false;
}

}  // namespace

ParsedDeclarations parse_declarations(std::string_view text) {
  ParsedDeclarations out;
  std::string clean = strip_comments(text);
  std::string_view rest = clean;
  while (!rest.empty()) {
    std::size_t semi = rest.find(';');
    std::string_view item = trim(rest.substr(0, semi));
    rest = semi == std::string_view::npos ? std::string_view() : rest.substr(semi + 1);
    if (item.empty()) continue;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      out.diagnostics.push_back("declaration without ':' skipped: " + std::string(item));
      continue;
    }
    std::string name = lower(trim(item.substr(0, colon)));
    std::string_view value = trim(item.substr(colon + 1));
    if (value.empty() || !parse_value(name, value, out.declarations)) {
      out.diagnostics.push_back("invalid declaration skipped: " + std::string(item));
    }
  }
  return out;
}

ParsedStylesheet parse_stylesheet(std::string_view text, std::size_t first_source_order) {
  ParsedStylesheet out;
  std::string clean = strip_comments(text);
  std::string_view s = clean;
  std::size_t order = first_source_order;
  std::size_t i = 0;
  auto skip_block = [&](std::size_t open) {
    // `open` indexes a '{'; returns the index just past its matching '}'.
    int depth = 0;
    for (std::size_t j = open; j < s.size(); ++j) {
      if (s[j] == '{') ++depth;
      if (s[j] == '}' && --depth == 0) return j + 1;
    }
    return s.size();
  };
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == s.size()) break;
    if (s[i] == '@') {
      std::size_t stop = s.find_first_of(";{", i);
      if (stop == std::string_view::npos) break;
      out.diagnostics.push_back("at-rule skipped: " + std::string(trim(s.substr(i, stop - i))));
      i = s[stop] == ';' ? stop + 1 : skip_block(stop);
      continue;
    }
    std::size_t open = s.find('{', i);
    if (open == std::string_view::npos) {
      out.diagnostics.push_back("trailing text without a block: " + std::string(trim(s.substr(i))));
      break;
    }
    std::string_view prelude = trim(s.substr(i, open - i));
    std::size_t end = skip_block(open);
    std::size_t body_end = end > open + 1 && end <= s.size() && s[end - 1] == '}' ? end - 1 : end;
    std::string_view body = s.substr(open + 1, body_end - open - 1);
    i = end;

    std::vector<Selector> selectors;
    bool valid = true;
    std::string_view list = prelude;
    while (true) {
      std::size_t comma = list.find(',');
      std::string_view one = trim(list.substr(0, comma));
      try {
        selectors.push_back(parse_selector(one));
      } catch (const StyleError& e) {
        out.diagnostics.push_back(std::string("rule dropped: ") + e.what());
        valid = false;
        break;
      }
      if (comma == std::string_view::npos) break;
      list = list.substr(comma + 1);
    }
    if (!valid) continue;
    ParsedDeclarations decls = parse_declarations(body);
    for (auto& d : decls.diagnostics) out.diagnostics.push_back(std::move(d));
    for (auto& selector : selectors) {
      out.rules.push_back(Rule{std::move(selector), decls.declarations, order++});
    }
  }
  return out;
}

}  // namespace weft
