#include "weft/display/display_list.h"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "weft/base/format.h"
#include "weft/base/overloaded.h"
#include "weft/base/utf8.h"
#include "weft/flow/builder.h"
#include "weft/layout/layout.h"

namespace weft {

DisplayList build_display_list(const FlowTree& flows) {
  DisplayList items;
  if (flows.empty()) return items;
  std::vector<Point> origins = absolute_origins(flows);
  for (FlowId id : flows.preorder()) {
    const Flow& f = flows.at(id);
    const Point& origin = origins[id.value];
    if (f.style.background_color) {
      items.emplace_back(SolidRect{origin.x, origin.y, f.metrics.used_width, f.metrics.used_height,
                                   *f.style.background_color});
    }
    for (const LineBox& line : f.metrics.lines) {
      for (const LineSegment& segment : line.segments) {
        if (!segment.color) continue;
        items.emplace_back(TextRun{origin.x + segment.x, origin.y + line.baseline, segment.text,
                                   segment.font_size, *segment.color});
      }
    }
  }
  return items;
}

std::string display_list_json(const DisplayList& items) {
  if (items.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += "  ";
    std::visit(Overloaded{
                   [&](const SolidRect& r) {
                     out += "{\"type\":\"rect\",\"x\":" + format_px(r.x) + ",\"y\":" + format_px(r.y) +
                            ",\"w\":" + format_px(r.w) + ",\"h\":" + format_px(r.h) + ",\"color\":\"" +
                            format_color(r.color) + "\"}";
                   },
                   [&](const TextRun& t) {
                     out += "{\"type\":\"text\",\"x\":" + format_px(t.x) + ",\"y\":" + format_px(t.y) +
                            ",\"text\":" + nlohmann::json(t.text).dump() +
                            ",\"font_size\":" + format_px(t.font_size) + ",\"color\":\"" +
                            format_color(t.color) + "\"}";
                   },
               },
               items[i]);
    out += i + 1 < items.size() ? ",\n" : "\n";
  }
  out += "]\n";
  return out;
}

namespace {

void fill(RasterImage& image, double x, double y, double w, double h, Rgb color) {
  if (!(w > 0) || !(h > 0)) return;
  auto first = [](double edge, int limit) {
    return static_cast<int>(std::clamp(std::ceil(edge - 0.5), 0.0, static_cast<double>(limit)));
  };
  int x0 = first(x, image.width);
  int x1 = first(x + w, image.width);
  int y0 = first(y, image.height);
  int y1 = first(y + h, image.height);
  for (int row = y0; row < y1; ++row) {
    std::uint8_t* p = image.pixels.data() + (static_cast<std::size_t>(row) * image.width + x0) * 3;
    for (int col = x0; col < x1; ++col) {
      *p++ = color.r;
      *p++ = color.g;
      *p++ = color.b;
    }
  }
}

}  // namespace

RasterImage paint(const DisplayList& items, int width, int height) {
  if (width <= 0 || height <= 0) {
    throw DisplayError(DisplayErrc::kBadCanvas, "canvas size must be positive");
  }
  RasterImage image{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height * 3, 255)};
  for (const DisplayItem& item : items) {
    std::visit(Overloaded{
                   [&](const SolidRect& r) { fill(image, r.x, r.y, r.w, r.h, r.color); },
                   [&](const TextRun& t) {
                     double advance = char_advance(t.font_size);
                     double glyph_height = 0.8 * t.font_size;
                     std::u32string chars = utf8_decode(t.text);
                     for (std::size_t i = 0; i < chars.size(); ++i) {
                       if (chars[i] == U' ') continue;
                       fill(image, t.x + static_cast<double>(i) * advance, t.y - glyph_height, advance,
                            glyph_height, t.color);
                     }
                   },
               },
               item);
  }
  return image;
}

std::string encode_ppm(const RasterImage& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
  return out;
}

}  // namespace weft
