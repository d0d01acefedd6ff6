#include "support/reference_tokenizer.h"

#include <algorithm>
#include <optional>
#include <string>

#include "weft/base/utf8.h"

namespace weft::testing {

namespace {

bool alpha(char32_t c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool space(char32_t c) { return c == ' ' || c == '\t' || c == '\n' || c == '\f' || c == '\r'; }
char32_t lower(char32_t c) { return c >= 'A' && c <= 'Z' ? c + 32 : c; }

class Reference {
 public:
  explicit Reference(std::u32string text) : s_(std::move(text)) {}

  std::vector<Token> run() {
    while (i_ < s_.size()) {
      if (script_) {
        script_text();
        continue;
      }
      char32_t c = s_[i_];
      if (c == '&') {
        std::u32string decoded = char_ref();
        for (char32_t d : decoded) out_.push_back(Character{d});
      } else if (c == '<') {
        open_angle();
      } else {
        out_.push_back(Character{c});
        ++i_;
      }
    }
    out_.push_back(EndOfStream{});
    return std::move(out_);
  }

 private:
  bool at_end(std::size_t k) const { return k >= s_.size(); }

  // At '&'. Returns the replacement text and advances past what it used.
  std::u32string char_ref() {
    std::size_t j = i_ + 1;
    while (j < s_.size() && (alpha(s_[j]) || (s_[j] >= '0' && s_[j] <= '9') || s_[j] == '#')) ++j;
    std::u32string name = s_.substr(i_ + 1, j - i_ - 1);
    if (j < s_.size() && s_[j] == ';') {
      i_ = j + 1;
      if (auto r = resolve(name)) return std::u32string(1, *r);
      return U"&" + name + U";";
    }
    i_ = j;
    return U"&" + name;
  }

  static std::optional<char32_t> resolve(const std::u32string& name) {
    if (name == U"amp") return U'&';
    if (name == U"lt") return U'<';
    if (name == U"gt") return U'>';
    if (name == U"quot") return U'"';
    if (name == U"apos") return U'\'';
    if (name.size() < 2 || name[0] != '#') return std::nullopt;
    bool hex = name[1] == 'x' || name[1] == 'X';
    std::u32string digits = name.substr(hex ? 2 : 1);
    if (digits.empty()) return std::nullopt;
    unsigned long long v = 0;
    for (char32_t d : digits) {
      int x;
      if (d >= '0' && d <= '9') {
        x = static_cast<int>(d - '0');
      } else if (hex && lower(d) >= 'a' && lower(d) <= 'f') {
        x = static_cast<int>(lower(d) - 'a' + 10);
      } else {
        return std::nullopt;
      }
      v = std::min<unsigned long long>(v * (hex ? 16 : 10) + x, 0x110000);
    }
    if (v == 0 || v > 0x10FFFF || (v >= 0xD800 && v <= 0xDFFF)) return kReplacementCharacter;
    return static_cast<char32_t>(v);
  }

  void open_angle() {
    std::size_t start = i_;
    char32_t next = at_end(i_ + 1) ? 0 : s_[i_ + 1];
    if (alpha(next)) {
      i_ += 1;
      if (!tag(false)) raw_from(start);
      return;
    }
    if (next == '/') {
      char32_t after = at_end(i_ + 2) ? 0 : s_[i_ + 2];
      if (alpha(after)) {
        i_ += 2;
        if (!tag(true)) raw_from(start);
      } else if (after == '>') {
        i_ += 3;
      } else {
        out_.push_back(Character{U'<'});
        out_.push_back(Character{U'/'});
        i_ += 2;
      }
      return;
    }
    if (next == '!') {
      markup();
      return;
    }
    out_.push_back(Character{U'<'});
    ++i_;
  }

  void raw_from(std::size_t start) {
    for (std::size_t k = start; k < s_.size(); ++k) out_.push_back(Character{s_[k]});
    i_ = s_.size();
  }

  // After "<" or "</"; false when the input ends inside the tag.
  bool tag(bool end) {
    std::string name;
    while (!at_end(i_) && !space(s_[i_]) && s_[i_] != '/' && s_[i_] != '>') utf8_append(name, lower(s_[i_++]));
    std::vector<Attribute> attrs;
    bool self_closing = false;
    while (true) {
      while (!at_end(i_) && space(s_[i_])) ++i_;
      if (at_end(i_)) return false;
      if (s_[i_] == '>') {
        ++i_;
        break;
      }
      if (s_[i_] == '/') {
        ++i_;
        if (at_end(i_)) return false;
        if (s_[i_] == '>') {
          self_closing = true;
          ++i_;
          break;
        }
        continue;
      }
      Attribute a;
      utf8_append(a.name, lower(s_[i_++]));
      while (!at_end(i_) && !space(s_[i_]) && s_[i_] != '/' && s_[i_] != '>' && s_[i_] != '=') {
        utf8_append(a.name, lower(s_[i_++]));
      }
      std::size_t k = i_;
      while (!at_end(k) && space(s_[k])) ++k;
      if (!at_end(k) && s_[k] == '=') {
        i_ = k + 1;
        while (!at_end(i_) && space(s_[i_])) ++i_;
        if (at_end(i_)) return false;
        char32_t q = s_[i_];
        if (q == '"' || q == '\'') {
          ++i_;
          while (true) {
            if (at_end(i_)) return false;
            if (s_[i_] == q) {
              ++i_;
              break;
            }
            if (s_[i_] == '&') {
              a.value += utf8_encode(char_ref());
            } else {
              utf8_append(a.value, s_[i_++]);
            }
          }
        } else if (q != '>') {
          while (!at_end(i_) && !space(s_[i_]) && s_[i_] != '>') {
            if (s_[i_] == '&') {
              a.value += utf8_encode(char_ref());
            } else {
              utf8_append(a.value, s_[i_++]);
            }
          }
        }
      }
      if (std::none_of(attrs.begin(), attrs.end(), [&](const Attribute& b) { return b.name == a.name; })) {
        attrs.push_back(std::move(a));
      }
    }
    if (end) {
      out_.push_back(EndTag{name});
    } else {
      out_.push_back(StartTag{name, attrs, self_closing});
      script_ = name == "script" && !self_closing;
    }
    return true;
  }

  void markup() {
    // At "<!".
    if (s_.compare(i_, 4, U"<!--") == 0) {
      if (s_.compare(i_ + 4, 1, U">") == 0) {
        out_.push_back(Comment{""});
        i_ += 5;
        return;
      }
      std::size_t close = s_.find(U"-->", i_ + 4);
      std::size_t stop = close == std::u32string::npos ? s_.size() : close;
      out_.push_back(Comment{utf8_encode(s_.substr(i_ + 4, stop - i_ - 4))});
      i_ = close == std::u32string::npos ? s_.size() : close + 3;
      return;
    }
    std::size_t close = s_.find(U'>', i_ + 2);
    std::size_t stop = close == std::u32string::npos ? s_.size() : close;
    std::string text = utf8_encode(s_.substr(i_ + 2, stop - i_ - 2));
    i_ = close == std::u32string::npos ? s_.size() : close + 1;
    std::string lowered = text;
    for (char& c : lowered) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lowered.rfind("doctype", 0) == 0) {
      std::string rest = lowered.substr(7);
      std::size_t b = rest.find_first_not_of(" \t\n\f\r");
      std::string name;
      if (b != std::string::npos) name = rest.substr(b, rest.find_first_of(" \t\n\f\r", b) - b);
      out_.push_back(Doctype{name});
    } else {
      out_.push_back(Comment{text});
    }
  }

  void script_text() {
    std::size_t k = i_;
    while (k < s_.size()) {
      if (s_[k] == '<' && k + 8 <= s_.size() && s_[k + 1] == '/') {
        std::u32string name;
        for (std::size_t m = k + 2; m < k + 8; ++m) name.push_back(lower(s_[m]));
        bool boundary = k + 8 < s_.size() && (space(s_[k + 8]) || s_[k + 8] == '/' || s_[k + 8] == '>');
        if (name == U"script" && boundary) break;
      }
      ++k;
    }
    for (std::size_t m = i_; m < k; ++m) out_.push_back(Character{s_[m]});
    i_ = k;
    script_ = false;
    if (k < s_.size()) {
      std::size_t start = i_;
      i_ += 2;
      if (!tag(true)) raw_from(start);
    }
  }

  std::u32string s_;
  std::size_t i_ = 0;
  bool script_ = false;
  std::vector<Token> out_;
};

}  // namespace

std::vector<Token> reference_tokenize(std::string_view document) {
  return Reference(utf8_decode(document)).run();
}

}  // namespace weft::testing
