#include "support/cascade_cases.h"

#include <algorithm>
#include <sstream>

#include "weft/engine/document_parser.h"
#include "weft/style/cascade.h"
#include "weft/style/stylesheet.h"

namespace weft::testing {

const std::vector<CascadeCase>& cascade_cases() {
  static const std::vector<CascadeCase> cases = {
      {"class beats type", "div {color: red} .a {color: blue}", "<div class=a t>x</div>", {"color=#0000ff"}},
      {"source order breaks ties", "div {width: 10px} div {width: 20px}", "<div t></div>", {"width=20.00px"}},
      {"color inherits", "", "<div style='color: green'><span t>x</span></div>", {"color=#008000"}},
      {"id beats three classes", "#x {color: red} .a.b.c {color: blue}", "<p id=x class='a b c' t>x</p>",
       {"color=#ff0000"}},
      {"class beats type regardless of order", ".a {color: red} p {color: blue}", "<p class=a t>x</p>",
       {"color=#ff0000"}},
      {"two types beat one", "div p {color: red} p {color: blue}", "<div><p t>x</p></div>", {"color=#ff0000"}},
      {"type beats universal", "p {color: red} * {color: blue}", "<p t>x</p>", {"color=#ff0000"}},
      {"universal rule beats inheritance", "* {color: blue} div {color: red}", "<div><p t>x</p></div>",
       {"color=#0000ff"}},
      {"inline style beats id", "#x {color: red}", "<p id=x style='color: blue' t>x</p>", {"color=#0000ff"}},
      {"inline font-size em uses parent size", "div {font-size: 10px}", "<div><p style='font-size: 2em' t>x</p></div>",
       {"font-size=20.00px"}},
      {"font-size em uses parent size", "div {font-size: 10px} p {font-size: 1.5em}", "<div><p t>x</p></div>",
       {"font-size=15.00px"}},
      {"margin em uses own size", "p {font-size: 20px; margin-left: 2em}", "<p t>x</p>", {"margin-left=40.00px"}},
      {"padding two values", "p {padding: 1px 2px}", "<p t>x</p>",
       {"padding-top=1.00px", "padding-right=2.00px", "padding-bottom=1.00px", "padding-left=2.00px"}},
      {"margin three values", "p {margin: 1px 2px 3px}", "<p t>x</p>",
       {"margin-top=1.00px", "margin-right=2.00px", "margin-bottom=3.00px", "margin-left=2.00px"}},
      {"padding four values", "p {padding: 1px 2px 3px 4px}", "<p t>x</p>",
       {"padding-top=1.00px", "padding-right=2.00px", "padding-bottom=3.00px", "padding-left=4.00px"}},
      {"later shorthand overrides longhand", "p {margin-left: 5px} p {margin: 1px}", "<p t>x</p>",
       {"margin-left=1.00px"}},
      {"specific longhand survives later shorthand", ".a {margin-left: 5px} p {margin: 1px}", "<p class=a t>x</p>",
       {"margin-left=5.00px", "margin-top=1.00px"}},
      {"last declaration in a block wins", "p {color: red; color: blue}", "<p t>x</p>", {"color=#0000ff"}},
      {"invalid value is skipped", "p {color: red} p {color: notacolor}", "<p t>x</p>", {"color=#ff0000"}},
      {"color inherits across levels", "body {color: #123}", "<div><p t>x</p></div>", {"color=#112233"}},
      {"background does not inherit", "div {background-color: red}", "<div><p t>x</p></div>",
       {"background-color=transparent"}},
      {"width does not inherit", "div {width: 100px}", "<div><p t>x</p></div>", {"width=auto"}},
      {"li defaults to list-item", "", "<ul><li t>x</li></ul>", {"display=list-item"}},
      {"span defaults to inline", "", "<p><span t>x</span></p>", {"display=inline"}},
      {"ul defaults to block", "", "<ul t></ul>", {"display=block"}},
      {"display none from a rule", ".h {display: none}", "<div class=h t>x</div>", {"display=none"}},
      {"child combinator needs the parent", "div > p {color: red}", "<div><span><p t>x</p></span></div>",
       {"color=#000000"}},
      {"descendant combinator spans levels", "div p {color: red}", "<div><span><p t>x</p></span></div>",
       {"color=#ff0000"}},
      {"selector list", "h1, p {color: red}", "<p t>x</p>", {"color=#ff0000"}},
      {"equal classes later wins", ".a {color: red} .b {color: blue}", "<p class='a b' t>x</p>", {"color=#0000ff"}},
      {"equal classes order reversed", ".b {color: blue} .a {color: red}", "<p class='a b' t>x</p>",
       {"color=#ff0000"}},
      {"explicit transparent", "p {background-color: red} .a {background-color: transparent}",
       "<p class=a t>x</p>", {"background-color=transparent"}},
      {"short hex expands", "p {color: #abc}", "<p t>x</p>", {"color=#aabbcc"}},
      {"font-size inherits", "div {font-size: 20px}", "<div><span t>x</span></div>", {"font-size=20.00px"}},
      {"width in em", "p {font-size: 10px; width: 3em}", "<p t>x</p>", {"width=30.00px"}},
      {"id beats later class", "#x {color: red} .a {color: blue}", "<p id=x class=a t>x</p>", {"color=#ff0000"}},
      {"div.note beats later .note", "div.note {color: red} .note {color: blue}", "<div class=note t>x</div>",
       {"color=#ff0000"}},
      {"#main .item beats div .item", "#main .item {color: red} div .item {color: blue}",
       "<div id=main><p class=item t>x</p></div>", {"color=#ff0000"}},
      {"root font size default", "", "<p t>x</p>", {"font-size=16.00px"}},
      {"negative margin rejected", "p {margin-left: 3px} p {margin-left: -5px}", "<p t>x</p>",
       {"margin-left=3.00px"}},
      {"auto width resets fixed", "p {width: 50px} .a {width: auto}", "<p class=a t>x</p>", {"width=auto"}},
  };
  return cases;
}

std::string check_cascade_case(const CascadeCase& c) {
  ParsedDocument doc = parse_document("<html><body>" + c.body + "</body></html>");
  std::vector<Rule> rules = parse_stylesheet(c.css).rules;
  StyleMap styles = compute_styles(doc.tree, rules);
  std::optional<NodeId> target;
  for (NodeId id : doc.tree.preorder()) {
    const ElementData* e = doc.tree.element(id);
    if (e && e->attribute("t")) {
      target = id;
      break;
    }
  }
  if (!target) return "no element marked t";
  std::string prefix = std::to_string(target->value) + ": ";
  std::vector<std::string> have;
  std::istringstream in(dump_style(doc.tree, styles));
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) have.push_back(line.substr(prefix.size()));
  }
  for (const std::string& want : c.expected) {
    if (std::find(have.begin(), have.end(), want) == have.end()) {
      std::string got;
      std::string property = want.substr(0, want.find('=') + 1);
      for (const std::string& h : have) {
        if (h.rfind(property, 0) == 0) got = h;
      }
      return "expected " + want + ", got " + (got.empty() ? "nothing" : got);
    }
  }
  return "";
}

}  // namespace weft::testing
