#include <gtest/gtest.h>

#include <set>

#include "support/corpus.h"
#include "weft/engine/document_parser.h"
#include "weft/engine/page.h"
#include "weft/flow/builder.h"
#include "weft/style/cascade.h"
#include "weft/style/stylesheet.h"

namespace weft {
namespace {

struct Built {
  DomTree dom;
  StyleMap styles;
  FlowTree flows;
};

Built build(const std::string& html, const std::string& css = "") {
  Built b{parse_document(html).tree, {}, {}};
  std::vector<std::string> sheets{css};
  b.styles = compute_styles(b.dom, collect_rules(b.dom, sheets));
  b.flows = build_flow_tree(b.dom, b.styles);
  return b;
}

// The flow dump of html/body wrapping `inner` (two extra levels of indent).
std::string under_body(const Built& b, const std::string& inner) {
  return "block " + std::to_string(b.dom.resolve_path("0")->value) + "\n  block " +
         std::to_string(b.dom.resolve_path("0/0")->value) + "\n" + inner;
}

TEST(FlowBuilder, ListItemGetsMarker) {
  Built b = build("<ul><li>x</li></ul>");
  std::string ul = std::to_string(b.dom.resolve_path("0/0/0")->value);
  std::string li = std::to_string(b.dom.resolve_path("0/0/0/0")->value);
  EXPECT_EQ(dump_flow(b.flows), under_body(b, "    block " + ul + "\n      block " + li +
                                                  "\n        inline anon [marker \"• \", text \"x\"]\n"));
}

TEST(FlowBuilder, DisplayNonePruned) {
  Built b = build("<div style=\"display:none\">x</div>");
  EXPECT_EQ(dump_flow(b.flows), under_body(b, ""));
  EXPECT_EQ(b.flows.live_count(), 2u);
}

TEST(FlowBuilder, AnonymousWrapping) {
  Built b = build("<div>a<p>b</p>c</div>");
  std::string div = std::to_string(b.dom.resolve_path("0/0/0")->value);
  std::string p = std::to_string(b.dom.resolve_path("0/0/0/1")->value);
  EXPECT_EQ(dump_flow(b.flows),
            under_body(b, "    block " + div + "\n      inline anon [text \"a\"]\n      block " + p +
                              "\n        inline anon [text \"b\"]\n      inline anon [text \"c\"]\n"));
}

TEST(FlowBuilder, InlineElementsFlattenAndBlocksHoist) {
  Built b = build("<p>a <em>b <div>c</div> d</em> e</p>");
  std::string p = std::to_string(b.dom.resolve_path("0/0/0")->value);
  std::string div = std::to_string(b.dom.resolve_path("0/0/0/1/1")->value);
  EXPECT_EQ(dump_flow(b.flows),
            under_body(b, "    block " + p + "\n      inline anon [text \"a\", text \"b\"]\n      block " + div +
                              "\n        inline anon [text \"c\"]\n      inline anon [text \"d\", text \"e\"]\n"));
}

TEST(FlowBuilder, EmptyDocument) {
  Built b = build("");
  EXPECT_TRUE(b.flows.empty());
  EXPECT_EQ(dump_flow(b.flows), "");
}

TEST(FlowBuilder, MissingStyleThrows) {
  DomTree t = parse_document("<p>x</p>").tree;
  StyleMap partial = compute_styles(t, {});
  partial.erase(*t.resolve_path("0/0/0"));
  try {
    build_flow_tree(t, partial);
    FAIL();
  } catch (const FlowError& e) {
    EXPECT_EQ(e.code(), FlowErrc::kMissingStyle);
  }
}

TEST(FlowBuilder, WhitespaceCollapse) {
  EXPECT_EQ(collapse_whitespace("  a \n\t b  "), "a b");
  EXPECT_EQ(collapse_whitespace(" \n "), "");
  EXPECT_EQ(code_point_count("• x"), 3u);
}

TEST(FlowBuilder, TextUnitsGlueAcrossFragments) {
  ComputedStyle small;
  small.font_size = 10;
  ComputedStyle big;
  big.font_size = 20;
  std::vector<Fragment> fragments{
      TextFragment{"ab", small, NodeId{1}, false, false},
      TextFragment{"cd ef", big, NodeId{2}, false, true},
      TextFragment{"g", small, NodeId{3}, false, false},
  };
  auto units = make_text_units(fragments);
  ASSERT_EQ(units.size(), 3u);
  // "abcd" in two styles, then "ef", then "g" after a space whose advance
  // comes from "ef".
  EXPECT_EQ(units[0].pieces.size(), 2u);
  EXPECT_DOUBLE_EQ(units[0].width, 2 * 5 + 2 * 10);
  EXPECT_FALSE(units[0].space_before);
  EXPECT_TRUE(units[1].space_before);
  EXPECT_DOUBLE_EQ(units[1].space_width, 10);
  EXPECT_TRUE(units[2].space_before);
  EXPECT_DOUBLE_EQ(units[2].space_width, 10);
  EXPECT_DOUBLE_EQ(units[2].width, 5);
}

TEST(FlowBuilder, MarkerIsOneUnitWithItsSpace) {
  ComputedStyle s;
  std::vector<Fragment> fragments{MarkerFragment{std::string(kMarkerGlyph), s, NodeId{1}},
                                  TextFragment{"x", s, NodeId{2}, true, false}};
  auto units = make_text_units(fragments);
  ASSERT_EQ(units.size(), 2u);
  EXPECT_DOUBLE_EQ(units[0].width, 16);
  EXPECT_FALSE(units[1].space_before);
}

// Invariants over the corpus.
TEST(FlowBuilder, CorpusInvariants) {
  std::string css = testing::corpus_css();
  for (const auto& page : testing::corpus_pages()) {
    Built b = build(page.html, css);
    std::size_t displayed = 0;
    bool extra_expected = false;
    for (NodeId id : b.dom.preorder()) {
      const ComputedStyle* s = b.styles.find(id);
      if (!s) continue;
      // Only count elements whose ancestors are displayed too.
      bool shown = true;
      for (auto at = std::optional<NodeId>(id); at && *at != b.dom.root(); at = b.dom.node(*at).parent) {
        const ComputedStyle* a = b.styles.find(*at);
        if (a && a->display == Display::kNone) shown = false;
      }
      if (!shown || !s->is_block_level()) continue;
      ++displayed;
      if (s->display == Display::kListItem) extra_expected = true;
    }
    std::set<std::uint32_t> origins;
    for (FlowId id : b.flows.preorder()) {
      const Flow& f = b.flows.at(id);
      if (f.dom_origin) {
        EXPECT_TRUE(b.dom.contains(*f.dom_origin));
        EXPECT_TRUE(origins.insert(f.dom_origin->value).second) << page.name;
      }
      for (const Fragment& fr : f.fragments) {
        if (const auto* t = std::get_if<TextFragment>(&fr)) {
          EXPECT_FALSE(t->text.empty());
          EXPECT_EQ(t->text, collapse_whitespace(t->text));
        }
      }
    }
    EXPECT_GE(b.flows.live_count(), displayed) << page.name;
    if (extra_expected) EXPECT_GT(b.flows.live_count(), displayed) << page.name;
    EXPECT_EQ(dump_flow(build_flow_tree(b.dom, b.styles)), dump_flow(b.flows)) << page.name;
  }
}

TEST(FlowBuilder, RebuildChildrenMarksDirty) {
  Built b = build("<div><p>a</p></div><div>b</div>");
  NodeId div = *b.dom.resolve_path("0/0/0");
  FlowId block = *b.flows.block_for(div);
  b.dom.append_child(div, TextData{"more"});
  rebuild_flow_children(b.flows, block, b.dom, b.styles);
  EXPECT_TRUE(b.flows.at(block).self_dirty);
  for (FlowId child : b.flows.at(block).children) EXPECT_TRUE(b.flows.at(child).self_dirty);
  EXPECT_TRUE(b.flows.at(b.flows.root()).descendant_dirty);
  EXPECT_FALSE(b.flows.at(b.flows.root()).self_dirty);
  FlowId other = *b.flows.block_for(*b.dom.resolve_path("0/0/1"));
  EXPECT_FALSE(b.flows.at(other).self_dirty);
  EXPECT_EQ(b.flows.live_count(), build_flow_tree(b.dom, b.styles).live_count());
}

}  // namespace
}  // namespace weft
