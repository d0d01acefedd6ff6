#include "weft/dom/serialize.h"

#include "weft/base/format.h"
#include "weft/base/overloaded.h"
#include "weft/dom/tree_builder.h"

namespace weft {

namespace {

void escape_into(std::string& out, std::string_view text, bool attribute) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
        } else {
          out.push_back(c);
        }
        break;
      default: out.push_back(c);
    }
  }
}

void serialize_node(const DomTree& tree, NodeId id, bool raw_text, std::string& out) {
  const DomNode& n = tree.node(id);
  std::visit(Overloaded{
                 [&](const DocumentData&) {
                   for (NodeId child : n.children) serialize_node(tree, child, false, out);
                 },
                 [&](const ElementData& e) {
                   out += '<';
                   out += e.name;
                   for (const auto& a : e.attributes) {
                     out += ' ';
                     out += a.name;
                     out += "=\"";
                     escape_into(out, a.value, true);
                     out += '"';
                   }
                   out += '>';
                   if (is_void_element(e.name) && n.children.empty()) return;
                   for (NodeId child : n.children) serialize_node(tree, child, e.name == "script", out);
                   out += "</";
                   out += e.name;
                   out += '>';
                 },
                 [&](const TextData& t) {
                   if (raw_text) {
                     out += t.data;
                   } else {
                     escape_into(out, t.data, false);
                   }
                 },
                 [&](const CommentData& c) {
                   out += "<!--";
                   out += c.text;
                   out += "-->";
                 },
             },
             n.kind);
}

void dump_node(const DomTree& tree, NodeId id, std::size_t depth, std::string& out) {
  const DomNode& n = tree.node(id);
  out.append(depth * 2, ' ');
  std::visit(Overloaded{
                 [&](const DocumentData&) { out += "document"; },
                 [&](const ElementData& e) {
                   out += "element ";
                   out += e.name;
                   for (const auto& a : e.attributes) {
                     out += ' ';
                     out += a.name;
                     out += "=\"";
                     out += escape_text(a.value);
                     out += '"';
                   }
                 },
                 [&](const TextData& t) { out += "text \"" + escape_text(t.data) + "\""; },
                 [&](const CommentData& c) { out += "comment \"" + escape_text(c.text) + "\""; },
             },
             n.kind);
  out += '\n';
  for (NodeId child : n.children) dump_node(tree, child, depth + 1, out);
}

}  // namespace

std::string serialize_html(const DomTree& tree) {
  std::string out;
  serialize_node(tree, tree.root(), false, out);
  return out;
}

std::string dump_dom(const DomTree& tree) {
  std::string out;
  dump_node(tree, tree.root(), 0, out);
  return out;
}

}  // namespace weft
