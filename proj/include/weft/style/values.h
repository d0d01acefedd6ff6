#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace weft {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// nullopt is "transparent".
using Color = std::optional<Rgb>;

enum class Display : std::uint8_t { kBlock, kInline, kListItem, kNone };

struct Edges {
  double top = 0;
  double right = 0;
  double bottom = 0;
  double left = 0;

  double horizontal() const { return left + right; }
  double vertical() const { return top + bottom; }

  friend bool operator==(const Edges&, const Edges&) = default;
};

struct ComputedStyle {
  Display display = Display::kInline;
  std::optional<double> width;   // nullopt is auto
  std::optional<double> height;
  Edges margin;
  Edges padding;
  double font_size = 16;
  Color color = Rgb{};
  Color background_color;

  bool is_block_level() const { return display == Display::kBlock || display == Display::kListItem; }

  friend bool operator==(const ComputedStyle&, const ComputedStyle&) = default;
};

// Longhand properties. Shorthands are expanded by the parser.
enum class Property : std::uint8_t {
  kDisplay,
  kWidth,
  kHeight,
  kMarginTop,
  kMarginRight,
  kMarginBottom,
  kMarginLeft,
  kPaddingTop,
  kPaddingRight,
  kPaddingBottom,
  kPaddingLeft,
  kColor,
  kBackgroundColor,
  kFontSize,
};
inline constexpr std::size_t kPropertyCount = 14;

std::string_view property_name(Property property);

enum class LengthUnit : std::uint8_t { kPx, kEm };

struct Length {
  double value = 0;
  LengthUnit unit = LengthUnit::kPx;

  friend bool operator==(const Length&, const Length&) = default;
};

struct Auto {
  friend bool operator==(const Auto&, const Auto&) = default;
};

using CssValue = std::variant<Display, Length, Auto, Color>;

struct Declaration {
  Property property;
  CssValue value;

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

std::optional<Color> parse_color(std::string_view text);
std::optional<Length> parse_length(std::string_view text);
std::optional<Display> parse_display(std::string_view text);

std::string format_color(const Color& color);
std::string_view display_name(Display display);

}  // namespace weft
