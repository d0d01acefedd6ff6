#pragma once

#include <string>
#include <variant>
#include <vector>

namespace weft {

struct Attribute {
  std::string name;
  std::string value;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct StartTag {
  std::string name;
  std::vector<Attribute> attributes;
  bool self_closing = false;

  friend bool operator==(const StartTag&, const StartTag&) = default;
};

struct EndTag {
  std::string name;

  friend bool operator==(const EndTag&, const EndTag&) = default;
};

struct Character {
  char32_t ch;

  friend bool operator==(const Character&, const Character&) = default;
};

struct Comment {
  std::string text;

  friend bool operator==(const Comment&, const Comment&) = default;
};

struct Doctype {
  std::string name;

  friend bool operator==(const Doctype&, const Doctype&) = default;
};

struct EndOfStream {
  friend bool operator==(const EndOfStream&, const EndOfStream&) = default;
};

using Token = std::variant<StartTag, EndTag, Character, Comment, Doctype, EndOfStream>;

// One line of the token dump: "KIND<TAB>payload", control characters escaped.
std::string describe_token(const Token& token);

}  // namespace weft
