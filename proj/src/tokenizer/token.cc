#include "weft/tokenizer/token.h"

#include "weft/base/format.h"
#include "weft/base/overloaded.h"
#include "weft/base/utf8.h"

namespace weft {

std::string describe_token(const Token& token) {
  return std::visit(
      Overloaded{
          [](const StartTag& t) {
            std::string out = "StartTag\t" + escape_text(t.name);
            for (const auto& a : t.attributes) {
              out += " " + escape_text(a.name) + "=\"" + escape_text(a.value) + "\"";
            }
            if (t.self_closing) out += " /";
            return out;
          },
          [](const EndTag& t) { return "EndTag\t" + escape_text(t.name); },
          [](const Character& t) {
            std::string ch;
            utf8_append(ch, t.ch);
            return "Character\t" + escape_text(ch);
          },
          [](const Comment& t) { return "Comment\t" + escape_text(t.text); },
          [](const Doctype& t) { return "Doctype\t" + escape_text(t.name); },
          [](const EndOfStream&) { return std::string("EndOfStream\t"); },
      },
      token);
}

}  // namespace weft
