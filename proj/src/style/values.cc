#include "weft/style/values.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>

namespace weft {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

std::string_view property_name(Property property) {
  static constexpr std::array<std::string_view, kPropertyCount> kNames = {
      "display",       "width",          "height",        "margin-top",   "margin-right",
      "margin-bottom", "margin-left",    "padding-top",   "padding-right", "padding-bottom",
      "padding-left",  "color",          "background-color", "font-size"};
  return kNames[static_cast<std::size_t>(property)];
}

std::optional<Color> parse_color(std::string_view text) {
  std::string name = lower(text);
  if (name == "transparent") return Color{};
  static constexpr std::array<std::pair<std::string_view, std::uint32_t>, 16> kNamed = {{
      {"black", 0x000000}, {"silver", 0xc0c0c0}, {"gray", 0x808080},   {"white", 0xffffff},
      {"maroon", 0x800000}, {"red", 0xff0000},   {"purple", 0x800080}, {"fuchsia", 0xff00ff},
      {"green", 0x008000}, {"lime", 0x00ff00},   {"olive", 0x808000},  {"yellow", 0xffff00},
      {"navy", 0x000080},  {"blue", 0x0000ff},   {"teal", 0x008080},   {"aqua", 0x00ffff},
  }};
  for (const auto& [n, v] : kNamed) {
    if (n == name) {
      return Color{Rgb{static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>(v >> 8),
                       static_cast<std::uint8_t>(v)}};
    }
  }
  if (name.size() != 4 && name.size() != 7) return std::nullopt;
  if (name[0] != '#') return std::nullopt;
  std::array<int, 6> d{};
  std::size_t digits = name.size() - 1;
  for (std::size_t i = 0; i < digits; ++i) {
    d[i] = hex_digit(name[i + 1]);
    if (d[i] < 0) return std::nullopt;
  }
  auto channel = [&](std::size_t i) {
    return digits == 3 ? static_cast<std::uint8_t>(d[i] * 17)
                       : static_cast<std::uint8_t>(d[2 * i] * 16 + d[2 * i + 1]);
  };
  return Color{Rgb{channel(0), channel(1), channel(2)}};
}

std::optional<Length> parse_length(std::string_view text) {
  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || !std::isfinite(value)) return std::nullopt;
  std::string unit = lower(std::string_view(end, text.data() + text.size() - end));
  if (unit == "px") return Length{value, LengthUnit::kPx};
  if (unit == "em") return Length{value, LengthUnit::kEm};
  if (unit.empty() && value == 0) return Length{0, LengthUnit::kPx};
  return std::nullopt;
}

std::optional<Display> parse_display(std::string_view text) {
  std::string name = lower(text);
  if (name == "block") return Display::kBlock;
  if (name == "inline") return Display::kInline;
  if (name == "list-item") return Display::kListItem;
  if (name == "none") return Display::kNone;
  return std::nullopt;
}

std::string format_color(const Color& color) {
  if (!color) return "transparent";
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", color->r, color->g, color->b);
  return buf;
}

std::string_view display_name(Display display) {
  switch (display) {
    case Display::kBlock: return "block";
    case Display::kInline: return "inline";
    case Display::kListItem: return "list-item";
    case Display::kNone: return "none";
  }
  return "inline";
}

}  // namespace weft
