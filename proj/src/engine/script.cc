#include "weft/engine/script.h"

#include <optional>

#include "weft/base/format.h"
#include "weft/base/overloaded.h"

namespace weft {

namespace {

struct Lexeme {
  enum Kind { kWord, kString, kPunct } kind;
  std::string text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f'; }

// nullopt on an unterminated string or bad escape.
std::optional<std::vector<Lexeme>> lex(std::string_view line) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (is_space(c)) {
      ++i;
    } else if (c == '(' || c == ')' || c == ';') {
      out.push_back({Lexeme::kPunct, std::string(1, c)});
      ++i;
    } else if (c == '"') {
      std::string value;
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char d = line[i++];
        if (d == '"') {
          closed = true;
          break;
        }
        if (d != '\\') {
          value.push_back(d);
          continue;
        }
        if (i == line.size()) return std::nullopt;
        char e = line[i++];
        switch (e) {
          case 'n': value.push_back('\n'); break;
          case 't': value.push_back('\t'); break;
          case '"': value.push_back('"'); break;
          case '\\': value.push_back('\\'); break;
          default: return std::nullopt;
        }
      }
      if (!closed) return std::nullopt;
      out.push_back({Lexeme::kString, std::move(value)});
    } else {
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i]) && line[i] != '(' && line[i] != ')' &&
             line[i] != ';' && line[i] != '"') {
        ++i;
      }
      out.push_back({Lexeme::kWord, std::string(line.substr(start, i - start))});
    }
  }
  return out;
}

bool is_path(const std::string& text) {
  if (text == "/") return true;
  bool digit = false;
  for (char c : text) {
    if (c == '/') {
      if (!digit) return false;
      digit = false;
    } else if (c >= '0' && c <= '9') {
      digit = true;
    } else {
      return false;
    }
  }
  return digit;
}

std::optional<ScriptCommand> parse_line(std::vector<Lexeme> lx) {
  if (!lx.empty() && lx.back().kind == Lexeme::kPunct && lx.back().text == ";") lx.pop_back();
  auto word = [&](std::size_t i, std::string_view w) {
    return i < lx.size() && lx[i].kind == Lexeme::kWord && lx[i].text == w;
  };
  auto kind = [&](std::size_t i, Lexeme::Kind k) { return i < lx.size() && lx[i].kind == k; };
  auto punct = [&](std::size_t i, std::string_view p) { return kind(i, Lexeme::kPunct) && lx[i].text == p; };
  auto path = [&](std::size_t i) { return kind(i, Lexeme::kWord) && is_path(lx[i].text); };

  if (word(0, "document.write") && lx.size() == 4 && punct(1, "(") && kind(2, Lexeme::kString) && punct(3, ")")) {
    return WriteCommand{lx[2].text};
  }
  if (word(0, "write") && lx.size() == 2 && kind(1, Lexeme::kString)) return WriteCommand{lx[1].text};
  if (word(0, "set") && lx.size() == 4 && path(1) && kind(2, Lexeme::kWord) && kind(3, Lexeme::kString)) {
    return SetAttributeCommand{lx[1].text, lx[2].text, lx[3].text};
  }
  if (word(0, "append") && lx.size() == 4 && path(1)) {
    if (word(2, "element") && kind(3, Lexeme::kWord)) return AppendChildCommand{lx[1].text, ElementPayload{lx[3].text}};
    if (word(2, "text") && kind(3, Lexeme::kString)) return AppendChildCommand{lx[1].text, TextPayload{lx[3].text}};
  }
  if (word(0, "remove") && lx.size() == 2 && path(1)) return RemoveNodeCommand{lx[1].text};
  return std::nullopt;
}

}  // namespace

ParsedScript parse_script(std::string_view text) {
  ParsedScript out;
  std::size_t line_number = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_number;
    std::size_t start = 0;
    while (start < line.size() && (is_space(line[start]))) ++start;
    line.remove_prefix(start);
    if (line.empty() || line.substr(0, 2) == "//") continue;
    std::optional<ScriptCommand> command;
    if (auto lx = lex(line)) command = parse_line(std::move(*lx));
    if (command) {
      out.commands.push_back(std::move(*command));
    } else {
      out.diagnostics.push_back("script line " + std::to_string(line_number) + " not understood: " +
                                escape_text(line));
    }
  }
  return out;
}

std::string describe_command(const ScriptCommand& command) {
  auto quoted = [](const std::string& s) { return "\"" + escape_text(s) + "\""; };
  return std::visit(
      Overloaded{
          [&](const WriteCommand& c) { return "write " + quoted(c.text); },
          [&](const SetAttributeCommand& c) { return "set " + c.path + " " + c.name + " " + quoted(c.value); },
          [&](const AppendChildCommand& c) {
            return std::visit(Overloaded{
                                  [&](const ElementPayload& p) { return "append " + c.parent_path + " element " + p.name; },
                                  [&](const TextPayload& p) { return "append " + c.parent_path + " text " + quoted(p.data); },
                              },
                              c.payload);
          },
          [&](const RemoveNodeCommand& c) { return "remove " + c.path; },
      },
      command);
}

}  // namespace weft
