#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "weft/base/error.h"
#include "weft/flow/flow_tree.h"
#include "weft/style/values.h"

namespace weft {

struct SolidRect {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;
  Rgb color;

  friend bool operator==(const SolidRect&, const SolidRect&) = default;
};

// x, y is the left end of the baseline.
struct TextRun {
  double x = 0;
  double y = 0;
  std::string text;
  double font_size = 0;
  Rgb color;

  friend bool operator==(const TextRun&, const TextRun&) = default;
};

using DisplayItem = std::variant<SolidRect, TextRun>;
using DisplayList = std::vector<DisplayItem>;

// Pre-order over flows: a flow's background before its text and children.
// Throws LayoutError(kIncomplete) when layout has not run.
DisplayList build_display_list(const FlowTree& flows);

// One object per line inside a top-level array; numbers use two decimals.
std::string display_list_json(const DisplayList& items);

enum class DisplayErrc { kBadCanvas };
using DisplayError = CodedError<DisplayErrc>;

struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB

  Rgb at(int x, int y) const {
    std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return Rgb{pixels[i], pixels[i + 1], pixels[i + 2]};
  }
};

// Glyphs are drawn as filled boxes one advance wide and 0.8 em tall standing
// on the baseline. A pixel is covered when its centre lies inside a box.
RasterImage paint(const DisplayList& items, int width, int height);

std::string encode_ppm(const RasterImage& image);

}  // namespace weft
