#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support/corpus.h"
#include "weft/display/display_list.h"
#include "weft/engine/document_parser.h"
#include "weft/engine/page.h"

namespace weft {
namespace {

Page make_page(const std::string& html, const std::string& css, unsigned workers = 1) {
  LayoutOptions options;
  options.traversal.workers = workers;
  return build_page(parse_document(html).tree, {css}, options);
}

constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kRed{255, 0, 0};
constexpr Rgb kBlue{0, 0, 255};

TEST(DisplayList, BackgroundThenText) {
  Page page = make_page("hi", "body { background-color: #ccc }");
  DisplayList items = build_display_list(page.flows);
  DisplayList want{SolidRect{0, 0, 800, 19.2, Rgb{0xcc, 0xcc, 0xcc}}, TextRun{0, 16, "hi", 16, Rgb{}}};
  EXPECT_EQ(items, want);
}

TEST(DisplayList, ParentBackgroundFirst) {
  Page page = make_page("<div class=a><div class=b></div></div>",
                        ".a { background-color: red; padding: 4px } .b { background-color: blue; height: 10px }");
  DisplayList items = build_display_list(page.flows);
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(std::get<SolidRect>(items[0]), (SolidRect{0, 0, 800, 18, kRed}));
  EXPECT_EQ(std::get<SolidRect>(items[1]), (SolidRect{4, 4, 792, 10, kBlue}));
}

TEST(DisplayList, TransparentEmptyBlocksPaintNothing) {
  Page page = make_page("<div></div><p></p>", "");
  EXPECT_TRUE(build_display_list(page.flows).empty());
  EXPECT_EQ(display_list_json({}), "[]\n");
}

TEST(DisplayList, TransparentTextSkipped) {
  Page page = make_page("<p>x</p><p class=t>y</p>", ".t { color: transparent }");
  DisplayList items = build_display_list(page.flows);
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(std::get<TextRun>(items[0]).text, "x");
}

TEST(DisplayList, JsonShape) {
  DisplayList items{SolidRect{1, 2.5, 3, 4.125, kRed}, TextRun{0, 16, "a \"q\" \xe2\x80\xa2", 16, kBlue}};
  std::string text = display_list_json(items);
  EXPECT_EQ(text,
            "[\n  {\"type\":\"rect\",\"x\":1.00,\"y\":2.50,\"w\":3.00,\"h\":4.12,\"color\":\"#ff0000\"},\n"
            "  {\"type\":\"text\",\"x\":0.00,\"y\":16.00,\"text\":\"a \\\"q\\\" \xe2\x80\xa2\",\"font_size\":16.00,"
            "\"color\":\"#0000ff\"}\n]\n");
  auto parsed = nlohmann::json::parse(text);
  ASSERT_TRUE(parsed.is_array());
  EXPECT_EQ(parsed[1]["text"], "a \"q\" \xe2\x80\xa2");
  EXPECT_DOUBLE_EQ(parsed[0]["h"].get<double>(), 4.12);
}

TEST(DisplayList, CorpusJsonParsesAndIsWorkerIndependent) {
  std::string css = testing::corpus_css();
  for (const auto& page : testing::corpus_pages()) {
    std::string one = display_list_json(build_display_list(make_page(page.html, css, 1).flows));
    EXPECT_EQ(display_list_json(build_display_list(make_page(page.html, css, 4).flows)), one) << page.name;
    auto parsed = nlohmann::json::parse(one);
    for (const auto& item : parsed) {
      EXPECT_TRUE(item["type"] == "rect" || item["type"] == "text");
    }
  }
}

TEST(DisplayList, RequiresLayout) {
  Page page = make_page("<p>x</p>", "");
  page.flows.at(page.flows.root()).metrics.height_done = false;
  EXPECT_THROW(build_display_list(page.flows), LayoutError);
}

TEST(Paint, EmptyListIsWhite) {
  RasterImage image = paint({}, 7, 5);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 7; ++x) ASSERT_EQ(image.at(x, y), kWhite);
  }
}

TEST(Paint, FullBlackRect) {
  RasterImage image = paint({SolidRect{0, 0, 7, 5, Rgb{}}}, 7, 5);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 7; ++x) ASSERT_EQ(image.at(x, y), Rgb{});
  }
}

TEST(Paint, LaterItemWinsOverlap) {
  DisplayList items{SolidRect{0, 0, 6, 6, kRed}, SolidRect{3, 3, 6, 6, kBlue}};
  RasterImage image = paint(items, 10, 10);
  EXPECT_EQ(image.at(4, 4), kBlue);
  EXPECT_EQ(image.at(1, 1), kRed);
  EXPECT_EQ(image.at(8, 8), kBlue);
  EXPECT_EQ(image.at(1, 8), kWhite);
  EXPECT_EQ(image.at(9, 9), kWhite);
}

// Swapping two overlapping items changes the overlap and nothing else.
TEST(Paint, PermutationChangesOnlyOverlap) {
  SolidRect a{0, 0, 6, 6, kRed};
  SolidRect b{3, 3, 6, 6, kBlue};
  RasterImage ab = paint({a, b}, 10, 10);
  RasterImage ba = paint({b, a}, 10, 10);
  for (int y = 0; y < 10; ++y) {
    for (int x = 0; x < 10; ++x) {
      bool overlap = x >= 3 && x < 6 && y >= 3 && y < 6;
      if (overlap) {
        EXPECT_EQ(ab.at(x, y), kBlue);
        EXPECT_EQ(ba.at(x, y), kRed);
      } else {
        EXPECT_EQ(ab.at(x, y), ba.at(x, y)) << x << "," << y;
      }
    }
  }
}

TEST(Paint, PixelCentreCoverageAndClipping) {
  RasterImage image = paint({SolidRect{1.4, 0.6, 1.2, 20, kRed}, SolidRect{-5, -5, 6, 6, kBlue}}, 4, 4);
  // Centres 1.5 and 2.5 lie in [1.4, 2.6); rows from centre 1.5 down.
  EXPECT_EQ(image.at(1, 1), kRed);
  EXPECT_EQ(image.at(2, 3), kRed);
  EXPECT_EQ(image.at(3, 1), kWhite);
  EXPECT_EQ(image.at(0, 0), kBlue);
  EXPECT_EQ(image.at(1, 0), kWhite);
}

TEST(Paint, GlyphBoxes) {
  RasterImage image = paint({TextRun{0, 16, "a b", 16, kRed}}, 30, 20);
  // Each glyph is 8 wide and 12.8 tall above the baseline; the space is
  // not drawn.
  EXPECT_EQ(image.at(3, 10), kRed);
  EXPECT_EQ(image.at(3, 2), kWhite);
  EXPECT_EQ(image.at(12, 10), kWhite);
  EXPECT_EQ(image.at(20, 10), kRed);
  EXPECT_EQ(image.at(3, 17), kWhite);
}

TEST(Paint, BadCanvas) {
  try {
    paint({}, 0, 5);
    FAIL();
  } catch (const DisplayError& e) {
    EXPECT_EQ(e.code(), DisplayErrc::kBadCanvas);
  }
}

TEST(Ppm, FormatAndStability) {
  DisplayList items{SolidRect{0, 0, 6, 6, kRed}, SolidRect{3, 3, 6, 6, kBlue}};
  std::string a = encode_ppm(paint(items, 10, 10));
  std::string b = encode_ppm(paint(items, 10, 10));
  EXPECT_EQ(a, b);
  std::string header = "P6\n10 10\n255\n";
  ASSERT_EQ(a.size(), header.size() + 10 * 10 * 3);
  EXPECT_EQ(a.substr(0, header.size()), header);
  EXPECT_EQ(static_cast<unsigned char>(a[header.size()]), 255);
  EXPECT_EQ(static_cast<unsigned char>(a[header.size() + 1]), 0);
}

TEST(Ppm, CorpusRasterStable) {
  std::string css = testing::corpus_css();
  for (const auto& page : testing::corpus_pages()) {
    DisplayList one = build_display_list(make_page(page.html, css, 1).flows);
    DisplayList four = build_display_list(make_page(page.html, css, 4).flows);
    EXPECT_EQ(encode_ppm(paint(one, 200, 150)), encode_ppm(paint(four, 200, 150))) << page.name;
  }
}

}  // namespace
}  // namespace weft
