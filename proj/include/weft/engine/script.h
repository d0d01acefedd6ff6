#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace weft {

struct WriteCommand {
  std::string text;

  friend bool operator==(const WriteCommand&, const WriteCommand&) = default;
};

// Paths are slash-separated child indices from the document root.
struct SetAttributeCommand {
  std::string path;
  std::string name;
  std::string value;

  friend bool operator==(const SetAttributeCommand&, const SetAttributeCommand&) = default;
};

struct ElementPayload {
  std::string name;

  friend bool operator==(const ElementPayload&, const ElementPayload&) = default;
};

struct TextPayload {
  std::string data;

  friend bool operator==(const TextPayload&, const TextPayload&) = default;
};

struct AppendChildCommand {
  std::string parent_path;
  std::variant<ElementPayload, TextPayload> payload;

  friend bool operator==(const AppendChildCommand&, const AppendChildCommand&) = default;
};

struct RemoveNodeCommand {
  std::string path;

  friend bool operator==(const RemoveNodeCommand&, const RemoveNodeCommand&) = default;
};

using ScriptCommand = std::variant<WriteCommand, SetAttributeCommand, AppendChildCommand, RemoveNodeCommand>;

struct ParsedScript {
  std::vector<ScriptCommand> commands;
  std::vector<std::string> diagnostics;
};

// One command per line:
//   document.write("text");      or   write "text"
//   set <path> <name> "<value>"
//   append <path> element <name>
//   append <path> text "<data>"
//   remove <path>
// Strings take \" \\ \n \t escapes. Blank lines and lines starting with //
// are ignored; anything else is reported as a diagnostic.
ParsedScript parse_script(std::string_view text);

std::string describe_command(const ScriptCommand& command);

}  // namespace weft
