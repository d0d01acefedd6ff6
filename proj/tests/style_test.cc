#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/cascade_cases.h"
#include "support/corpus.h"
#include "support/selector_oracle.h"
#include "weft/engine/document_parser.h"
#include "weft/engine/page.h"
#include "weft/style/cascade.h"
#include "weft/style/stylesheet.h"

namespace weft {
namespace {

TEST(Values, Colors) {
  EXPECT_EQ(parse_color("red"), Color(Rgb{255, 0, 0}));
  EXPECT_EQ(parse_color("#abc"), Color(Rgb{0xaa, 0xbb, 0xcc}));
  EXPECT_EQ(parse_color("#102030"), Color(Rgb{0x10, 0x20, 0x30}));
  EXPECT_EQ(parse_color("transparent"), std::optional<Color>(Color(std::nullopt)));
  EXPECT_EQ(parse_color("#12"), std::nullopt);
  EXPECT_EQ(parse_color("chartreuse"), std::nullopt);
  EXPECT_EQ(format_color(Rgb{1, 2, 255}), "#0102ff");
  EXPECT_EQ(format_color(std::nullopt), "transparent");
}

TEST(Values, Lengths) {
  EXPECT_EQ(parse_length("10px"), (Length{10, LengthUnit::kPx}));
  EXPECT_EQ(parse_length("1.5em"), (Length{1.5, LengthUnit::kEm}));
  EXPECT_EQ(parse_length("0"), (Length{0, LengthUnit::kPx}));
  EXPECT_EQ(parse_length("10"), std::nullopt);
  EXPECT_EQ(parse_length("10%"), std::nullopt);
  EXPECT_EQ(parse_length("px"), std::nullopt);
}

TEST(Stylesheet, SingleRule) {
  auto sheet = parse_stylesheet("div { width: 100px; }");
  ASSERT_EQ(sheet.rules.size(), 1u);
  EXPECT_EQ(sheet.rules[0].declarations, (std::vector<Declaration>{{Property::kWidth, Length{100}}}));
  EXPECT_TRUE(sheet.diagnostics.empty());
}

TEST(Stylesheet, BadDeclarationSkipped) {
  auto sheet = parse_stylesheet("div { width: 100px; bogus:; color: red }");
  ASSERT_EQ(sheet.rules.size(), 1u);
  EXPECT_EQ(sheet.rules[0].declarations,
            (std::vector<Declaration>{{Property::kWidth, Length{100}}, {Property::kColor, Color(Rgb{255, 0, 0})}}));
  EXPECT_EQ(sheet.diagnostics.size(), 1u);
}

TEST(Stylesheet, Empty) { EXPECT_TRUE(parse_stylesheet("").rules.empty()); }

TEST(Stylesheet, SelectorListsAndOrder) {
  auto sheet = parse_stylesheet("h1, p { color: red } @media print { x } .a { color: blue }", 5);
  ASSERT_EQ(sheet.rules.size(), 3u);
  EXPECT_EQ(to_string(sheet.rules[0].selector), "h1");
  EXPECT_EQ(to_string(sheet.rules[1].selector), "p");
  EXPECT_EQ(to_string(sheet.rules[2].selector), ".a");
  EXPECT_EQ(sheet.rules[0].source_order, 5u);
  EXPECT_EQ(sheet.rules[2].source_order, 7u);
}

TEST(Stylesheet, BadSelectorDropsRule) {
  auto sheet = parse_stylesheet("a:hover { color: red } p { color: blue }");
  ASSERT_EQ(sheet.rules.size(), 1u);
  EXPECT_EQ(to_string(sheet.rules[0].selector), "p");
  EXPECT_FALSE(sheet.diagnostics.empty());
}

TEST(Selector, Specificity) {
  EXPECT_EQ(specificity(parse_selector("*")), (Specificity{0, 0, 0}));
  EXPECT_EQ(specificity(parse_selector("div.note")), (Specificity{0, 1, 1}));
  EXPECT_EQ(specificity(parse_selector("#main .item")), (Specificity{1, 1, 0}));
  EXPECT_EQ(specificity(parse_selector("ul > li.a.b#c")), (Specificity{1, 2, 2}));
}

TEST(Selector, SpecificityIsAdditive) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    std::string a = testing::random_selector_text(rng);
    std::string b = testing::random_selector_text(rng);
    EXPECT_EQ(specificity(parse_selector(a + " " + b)), specificity(parse_selector(a)) + specificity(parse_selector(b)));
  }
}

TEST(Selector, RejectsUnsupported) {
  for (const char* bad : {"", "a:hover", "a + b", "a ~ b", "[x]", "a >", "> a", "a..b", "#"}) {
    EXPECT_THROW(parse_selector(bad), StyleError) << bad;
  }
}

TEST(Selector, ParseAndPrint) {
  Selector s = parse_selector("div  >  p.x#y   span");
  EXPECT_EQ(to_string(s), "div > p.x#y span");
  EXPECT_EQ(s.compounds.size(), 3u);
  EXPECT_EQ(s.combinators, (std::vector<Combinator>{Combinator::kChild, Combinator::kDescendant}));
}

TEST(Selector, CombinatorExamples) {
  DomTree t = parse_document("<div><span class=x>a</span><p><span class=x>b</span><i class=y>c</i></p></div>").tree;
  NodeId body = *t.resolve_path("0/0");
  NodeId direct = *t.resolve_path("0/0/0/0");
  NodeId nested = *t.resolve_path("0/0/0/1/0");
  NodeId y = *t.resolve_path("0/0/0/1/1");
  EXPECT_TRUE(matches(parse_selector("*"), body, t));
  EXPECT_TRUE(matches(parse_selector("div > .x"), direct, t));
  EXPECT_FALSE(matches(parse_selector("div > .x"), nested, t));
  EXPECT_TRUE(matches(parse_selector("div .y"), y, t));
  EXPECT_TRUE(matches(parse_selector("body p .y"), y, t));
  EXPECT_FALSE(matches(parse_selector("p body .y"), y, t));
}

TEST(Selector, MatchOnTextThrows) {
  DomTree t = parse_document("<p>x</p>").tree;
  try {
    matches(parse_selector("p"), *t.resolve_path("0/0/0/0"), t);
    FAIL();
  } catch (const StyleError& e) {
    EXPECT_EQ(e.code(), StyleErrc::kNotAnElement);
  }
}

TEST(Selector, AgreesWithBruteForceOracle) {
  std::mt19937_64 rng(21);
  std::size_t positives = 0;
  for (int round = 0; round < 100; ++round) {
    DomTree tree = testing::random_element_tree(rng, std::uniform_int_distribution<std::size_t>(1, 200)(rng));
    std::vector<NodeId> elements;
    for (NodeId id : tree.preorder()) {
      if (tree.element(id)) elements.push_back(id);
    }
    for (int k = 0; k < 20; ++k) {
      std::string text = testing::random_selector_text(rng);
      Selector s = parse_selector(text);
      for (NodeId id : elements) {
        bool want = testing::oracle_matches(text, id, tree);
        positives += want;
        ASSERT_EQ(matches(s, id, tree), want) << text << " on node " << id.value;
      }
    }
  }
  EXPECT_GT(positives, 1000u);
}

TEST(Cascade, HandDerivedTable) {
  ASSERT_GE(testing::cascade_cases().size(), 30u);
  for (const auto& c : testing::cascade_cases()) {
    EXPECT_EQ(testing::check_cascade_case(c), "") << c.name;
  }
}

TEST(Cascade, RuleOrderDoesNotMatter) {
  std::string css = testing::corpus_css() + ".note { color: blue } div.note { color: red } #main { color: green }";
  std::vector<Rule> rules = parse_stylesheet(css).rules;
  std::mt19937_64 rng(6);
  for (const auto& page : testing::corpus_pages()) {
    DomTree t = parse_document(page.html).tree;
    std::string want = dump_style(t, compute_styles(t, rules));
    for (int i = 0; i < 5; ++i) {
      std::vector<Rule> shuffled = rules;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(dump_style(t, compute_styles(t, shuffled)), want) << page.name;
    }
  }
}

TEST(Cascade, ParallelEqualsSerial) {
  std::vector<std::string> css{testing::corpus_css()};
  for (const auto& page : testing::corpus_pages()) {
    DomTree t = parse_document(page.html).tree;
    std::vector<Rule> rules = collect_rules(t, css);
    std::string one = dump_style(t, compute_styles(t, rules, {1, 1}));
    EXPECT_EQ(dump_style(t, compute_styles(t, rules, {4, 1})), one) << page.name;
  }
}

TEST(Cascade, LengthsFiniteAndFontPositive) {
  std::vector<std::string> css{testing::corpus_css()};
  for (const auto& page : testing::corpus_pages()) {
    DomTree t = parse_document(page.html).tree;
    StyleMap styles = compute_styles(t, collect_rules(t, css));
    for (NodeId id : t.preorder()) {
      if (!t.element(id)) continue;
      const ComputedStyle* s = styles.find(id);
      ASSERT_NE(s, nullptr);
      EXPECT_GT(s->font_size, 0);
      for (double v : {s->margin.top, s->margin.right, s->margin.bottom, s->margin.left, s->padding.top,
                       s->padding.right, s->padding.bottom, s->padding.left, s->width.value_or(0),
                       s->height.value_or(0)}) {
        EXPECT_TRUE(std::isfinite(v) && v >= 0);
      }
    }
  }
}

TEST(Cascade, RestyleSubtreeMatchesFullStyle) {
  DomTree t = parse_document("<div id=a><p>x<span>y</span></p></div>").tree;
  std::vector<Rule> rules = parse_stylesheet(".big { font-size: 30px } span { margin-left: 1em }").rules;
  StyleMap styles = compute_styles(t, rules);
  NodeId div = *t.resolve_path("0/0/0");
  t.set_attribute(div, "class", "big");
  restyle_subtree(t, rules, div, styles);
  EXPECT_EQ(dump_style(t, styles), dump_style(t, compute_styles(t, rules)));
}

TEST(Cascade, DumpFormat) {
  DomTree t = parse_document("<p>x</p>").tree;
  std::string dump = dump_style(t, compute_styles(t, {}));
  EXPECT_NE(dump.find("3: display=block\n"), std::string::npos) << dump;
  EXPECT_NE(dump.find("3: width=auto\n"), std::string::npos);
  EXPECT_LT(dump.find("3: background-color"), dump.find("3: width"));
}

}  // namespace
}  // namespace weft
