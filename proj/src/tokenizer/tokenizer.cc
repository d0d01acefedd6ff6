#include "weft/tokenizer/tokenizer.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "weft/base/utf8.h"

namespace weft {

namespace {

using S = TokenizerState;
using C = CharClass;
using A = TokenizerAction;
using ClassMask = std::uint32_t;

constexpr ClassMask bit(C c) { return ClassMask{1} << static_cast<unsigned>(c); }

template <typename... Cs>
constexpr ClassMask of(Cs... classes) {
  return (bit(classes) | ...);
}

constexpr ClassMask kAllClasses = (ClassMask{1} << kCharClassCount) - 1;

template <typename... Cs>
constexpr ClassMask except(Cs... classes) {
  return kAllClasses & ~of(classes...);
}

constexpr ClassMask kAlpha = of(C::kUpperAlpha, C::kLowerAlpha);

struct RuleSpec {
  S state;
  ClassMask classes;
  TokenizerRule rule;
};

constexpr TokenizerRule go(S next, A a = A::kNone, A b = A::kNone, A c = A::kNone) {
  return TokenizerRule{{a, b, c}, next, false};
}

constexpr TokenizerRule reconsume_in(S next, A a = A::kNone, A b = A::kNone) {
  return TokenizerRule{{a, b, A::kNone}, next, true};
}

// EOF inside any tag: hand the tag's source text back as characters.
constexpr TokenizerRule kTagEof = go(S::kData, A::kEmitRawAsChars, A::kEmitEof);

// The rule table. Each row covers a set of character classes for one state;
// rows of one state must not overlap and together must cover every class.
// Rows whose `next` is kData in kCharacterReference are redirected to the
// saved return state by their action.
constexpr RuleSpec kRules[] = {
    // Data
    {S::kData, of(C::kAmpersand), go(S::kCharacterReference, A::kBeginCharRef)},
    {S::kData, of(C::kLessThan), go(S::kTagOpen, A::kStartRaw)},
    {S::kData, of(C::kEndOfFile), go(S::kData, A::kEmitEof)},
    {S::kData, except(C::kAmpersand, C::kLessThan, C::kEndOfFile), go(S::kData, A::kEmitChar)},

    // TagOpen
    {S::kTagOpen, of(C::kBang), go(S::kMarkupDeclarationOpen, A::kClearMarkup)},
    {S::kTagOpen, of(C::kSolidus), go(S::kEndTagOpen)},
    {S::kTagOpen, kAlpha, reconsume_in(S::kTagName, A::kCreateStartTag)},
    {S::kTagOpen, of(C::kEndOfFile), kTagEof},
    {S::kTagOpen, except(C::kBang, C::kSolidus, C::kUpperAlpha, C::kLowerAlpha, C::kEndOfFile),
     reconsume_in(S::kData, A::kEmitRawAsChars)},

    // EndTagOpen
    {S::kEndTagOpen, kAlpha, reconsume_in(S::kTagName, A::kCreateEndTag)},
    {S::kEndTagOpen, of(C::kGreaterThan), go(S::kData, A::kClearRaw)},
    {S::kEndTagOpen, of(C::kEndOfFile), kTagEof},
    {S::kEndTagOpen, except(C::kUpperAlpha, C::kLowerAlpha, C::kGreaterThan, C::kEndOfFile),
     reconsume_in(S::kData, A::kEmitRawAsChars)},

    // TagName
    {S::kTagName, of(C::kWhitespace), go(S::kBeforeAttributeName)},
    {S::kTagName, of(C::kSolidus), go(S::kSelfClosingStartTag)},
    {S::kTagName, of(C::kGreaterThan), go(S::kData, A::kEmitTag)},
    {S::kTagName, of(C::kEndOfFile), kTagEof},
    {S::kTagName, except(C::kWhitespace, C::kSolidus, C::kGreaterThan, C::kEndOfFile),
     go(S::kTagName, A::kAppendTagName)},

    // BeforeAttributeName
    {S::kBeforeAttributeName, of(C::kWhitespace), go(S::kBeforeAttributeName)},
    {S::kBeforeAttributeName, of(C::kSolidus), go(S::kSelfClosingStartTag)},
    {S::kBeforeAttributeName, of(C::kGreaterThan), go(S::kData, A::kEmitTag)},
    {S::kBeforeAttributeName, of(C::kEquals),
     go(S::kAttributeName, A::kStartAttribute, A::kAppendAttributeName)},
    {S::kBeforeAttributeName, of(C::kEndOfFile), kTagEof},
    {S::kBeforeAttributeName,
     except(C::kWhitespace, C::kSolidus, C::kGreaterThan, C::kEquals, C::kEndOfFile),
     reconsume_in(S::kAttributeName, A::kStartAttribute)},

    // AttributeName
    {S::kAttributeName, of(C::kWhitespace), go(S::kAfterAttributeName)},
    {S::kAttributeName, of(C::kSolidus), go(S::kSelfClosingStartTag)},
    {S::kAttributeName, of(C::kGreaterThan), go(S::kData, A::kEmitTag)},
    {S::kAttributeName, of(C::kEquals), go(S::kBeforeAttributeValue)},
    {S::kAttributeName, of(C::kEndOfFile), kTagEof},
    {S::kAttributeName,
     except(C::kWhitespace, C::kSolidus, C::kGreaterThan, C::kEquals, C::kEndOfFile),
     go(S::kAttributeName, A::kAppendAttributeName)},

    // AfterAttributeName
    {S::kAfterAttributeName, of(C::kWhitespace), go(S::kAfterAttributeName)},
    {S::kAfterAttributeName, of(C::kSolidus), go(S::kSelfClosingStartTag)},
    {S::kAfterAttributeName, of(C::kEquals), go(S::kBeforeAttributeValue)},
    {S::kAfterAttributeName, of(C::kGreaterThan), go(S::kData, A::kEmitTag)},
    {S::kAfterAttributeName, of(C::kEndOfFile), kTagEof},
    {S::kAfterAttributeName,
     except(C::kWhitespace, C::kSolidus, C::kEquals, C::kGreaterThan, C::kEndOfFile),
     reconsume_in(S::kAttributeName, A::kStartAttribute)},

    // BeforeAttributeValue
    {S::kBeforeAttributeValue, of(C::kWhitespace), go(S::kBeforeAttributeValue)},
    {S::kBeforeAttributeValue, of(C::kDoubleQuote), go(S::kAttributeValueDoubleQuoted)},
    {S::kBeforeAttributeValue, of(C::kSingleQuote), go(S::kAttributeValueSingleQuoted)},
    {S::kBeforeAttributeValue, of(C::kGreaterThan), go(S::kData, A::kEmitTag)},
    {S::kBeforeAttributeValue, of(C::kEndOfFile), kTagEof},
    {S::kBeforeAttributeValue,
     except(C::kWhitespace, C::kDoubleQuote, C::kSingleQuote, C::kGreaterThan, C::kEndOfFile),
     reconsume_in(S::kAttributeValueUnquoted)},

    // AttributeValueDoubleQuoted
    {S::kAttributeValueDoubleQuoted, of(C::kDoubleQuote), go(S::kAfterAttributeValueQuoted)},
    {S::kAttributeValueDoubleQuoted, of(C::kAmpersand),
     go(S::kCharacterReference, A::kBeginCharRef)},
    {S::kAttributeValueDoubleQuoted, of(C::kEndOfFile), kTagEof},
    {S::kAttributeValueDoubleQuoted, except(C::kDoubleQuote, C::kAmpersand, C::kEndOfFile),
     go(S::kAttributeValueDoubleQuoted, A::kAppendAttributeValue)},

    // AttributeValueSingleQuoted
    {S::kAttributeValueSingleQuoted, of(C::kSingleQuote), go(S::kAfterAttributeValueQuoted)},
    {S::kAttributeValueSingleQuoted, of(C::kAmpersand),
     go(S::kCharacterReference, A::kBeginCharRef)},
    {S::kAttributeValueSingleQuoted, of(C::kEndOfFile), kTagEof},
    {S::kAttributeValueSingleQuoted, except(C::kSingleQuote, C::kAmpersand, C::kEndOfFile),
     go(S::kAttributeValueSingleQuoted, A::kAppendAttributeValue)},

    // AttributeValueUnquoted
    {S::kAttributeValueUnquoted, of(C::kWhitespace), go(S::kBeforeAttributeName)},
    {S::kAttributeValueUnquoted, of(C::kAmpersand), go(S::kCharacterReference, A::kBeginCharRef)},
    {S::kAttributeValueUnquoted, of(C::kGreaterThan), go(S::kData, A::kEmitTag)},
    {S::kAttributeValueUnquoted, of(C::kEndOfFile), kTagEof},
    {S::kAttributeValueUnquoted,
     except(C::kWhitespace, C::kAmpersand, C::kGreaterThan, C::kEndOfFile),
     go(S::kAttributeValueUnquoted, A::kAppendAttributeValue)},

    // AfterAttributeValueQuoted
    {S::kAfterAttributeValueQuoted, of(C::kWhitespace), go(S::kBeforeAttributeName)},
    {S::kAfterAttributeValueQuoted, of(C::kSolidus), go(S::kSelfClosingStartTag)},
    {S::kAfterAttributeValueQuoted, of(C::kGreaterThan), go(S::kData, A::kEmitTag)},
    {S::kAfterAttributeValueQuoted, of(C::kEndOfFile), kTagEof},
    {S::kAfterAttributeValueQuoted,
     except(C::kWhitespace, C::kSolidus, C::kGreaterThan, C::kEndOfFile),
     reconsume_in(S::kBeforeAttributeName)},

    // SelfClosingStartTag
    {S::kSelfClosingStartTag, of(C::kGreaterThan),
     go(S::kData, A::kSetSelfClosing, A::kEmitTag)},
    {S::kSelfClosingStartTag, of(C::kEndOfFile), kTagEof},
    {S::kSelfClosingStartTag, except(C::kGreaterThan, C::kEndOfFile),
     reconsume_in(S::kBeforeAttributeName)},

    // MarkupDeclarationOpen: collects "<!..." until it is recognised as a
    // comment opener ("--") or closed by '>' as a doctype or bogus comment.
    {S::kMarkupDeclarationOpen, of(C::kHyphen),
     go(S::kMarkupDeclarationOpen, A::kMarkupHyphen)},
    {S::kMarkupDeclarationOpen, of(C::kGreaterThan), go(S::kData, A::kEmitMarkup)},
    {S::kMarkupDeclarationOpen, of(C::kEndOfFile), go(S::kData, A::kEmitMarkup, A::kEmitEof)},
    {S::kMarkupDeclarationOpen, except(C::kHyphen, C::kGreaterThan, C::kEndOfFile),
     go(S::kMarkupDeclarationOpen, A::kAppendMarkup)},

    // CommentStart
    {S::kCommentStart, of(C::kHyphen), go(S::kCommentEnd, A::kCommentDash)},
    {S::kCommentStart, of(C::kGreaterThan), go(S::kData, A::kEmitComment)},
    {S::kCommentStart, of(C::kEndOfFile), go(S::kData, A::kEmitComment, A::kEmitEof)},
    {S::kCommentStart, except(C::kHyphen, C::kGreaterThan, C::kEndOfFile),
     reconsume_in(S::kCommentBody)},

    // CommentBody
    {S::kCommentBody, of(C::kHyphen), go(S::kCommentEnd, A::kCommentDash)},
    {S::kCommentBody, of(C::kEndOfFile), go(S::kData, A::kEmitComment, A::kEmitEof)},
    {S::kCommentBody, except(C::kHyphen, C::kEndOfFile), go(S::kCommentBody, A::kAppendComment)},

    // CommentEnd: one or more pending dashes.
    {S::kCommentEnd, of(C::kHyphen), go(S::kCommentEnd, A::kCommentDash)},
    {S::kCommentEnd, of(C::kGreaterThan), go(S::kData, A::kCommentEndGreater)},
    {S::kCommentEnd, of(C::kEndOfFile),
     go(S::kData, A::kFlushCommentDashes, A::kEmitComment, A::kEmitEof)},
    {S::kCommentEnd, except(C::kHyphen, C::kGreaterThan, C::kEndOfFile),
     reconsume_in(S::kCommentBody, A::kFlushCommentDashes)},

    // CharacterReference
    {S::kCharacterReference, of(C::kUpperAlpha, C::kLowerAlpha, C::kDigit, C::kNumberSign),
     go(S::kCharacterReference, A::kAppendCharRef)},
    {S::kCharacterReference, of(C::kSemicolon), go(S::kData, A::kResolveCharRef)},
    {S::kCharacterReference,
     except(C::kUpperAlpha, C::kLowerAlpha, C::kDigit, C::kNumberSign, C::kSemicolon),
     reconsume_in(S::kData, A::kFlushCharRef)},

    // ScriptData
    {S::kScriptData, of(C::kLessThan), go(S::kScriptDataEndTagOpen, A::kStartRaw)},
    {S::kScriptData, of(C::kEndOfFile), go(S::kScriptData, A::kEmitEof)},
    {S::kScriptData, except(C::kLessThan, C::kEndOfFile), go(S::kScriptData, A::kEmitChar)},

    // ScriptDataEndTagOpen: a '<' inside script text.
    {S::kScriptDataEndTagOpen, of(C::kSolidus),
     go(S::kScriptDataEndTagName, A::kClearScriptEndTag)},
    {S::kScriptDataEndTagOpen, of(C::kEndOfFile), kTagEof},
    {S::kScriptDataEndTagOpen, except(C::kSolidus, C::kEndOfFile),
     reconsume_in(S::kScriptData, A::kEmitRawAsChars)},

    // ScriptDataEndTagName
    {S::kScriptDataEndTagName, kAlpha, go(S::kScriptDataEndTagName, A::kAppendScriptEndTag)},
    {S::kScriptDataEndTagName, of(C::kWhitespace),
     go(S::kBeforeAttributeName, A::kScriptEndTagBoundary)},
    {S::kScriptDataEndTagName, of(C::kSolidus),
     go(S::kSelfClosingStartTag, A::kScriptEndTagBoundary)},
    {S::kScriptDataEndTagName, of(C::kGreaterThan),
     go(S::kData, A::kScriptEndTagBoundary, A::kEmitTag)},
    {S::kScriptDataEndTagName, of(C::kEndOfFile), kTagEof},
    {S::kScriptDataEndTagName,
     except(C::kUpperAlpha, C::kLowerAlpha, C::kWhitespace, C::kSolidus, C::kGreaterThan,
            C::kEndOfFile),
     reconsume_in(S::kScriptData, A::kEmitRawAsChars)},
};

using RuleGrid = std::array<std::array<const TokenizerRule*, kCharClassCount>, kTokenizerStateCount>;

RuleGrid build_grid() {
  RuleGrid grid{};
  for (const RuleSpec& spec : kRules) {
    auto s = static_cast<std::size_t>(spec.state);
    for (std::size_t c = 0; c < kCharClassCount; ++c) {
      if (!(spec.classes & (ClassMask{1} << c))) continue;
      if (grid[s][c] != nullptr) {
        throw std::logic_error("tokenizer rule table: duplicate entry for state " +
                               std::string(state_name(spec.state)));
      }
      grid[s][c] = &spec.rule;
    }
  }
  return grid;
}

const RuleGrid& grid() {
  static const RuleGrid table = build_grid();
  return table;
}

char32_t ascii_lower(char32_t ch) { return (ch >= 'A' && ch <= 'Z') ? ch + 0x20 : ch; }

char32_t scrub_null(char32_t ch) { return ch == 0 ? kReplacementCharacter : ch; }

std::optional<char32_t> parse_number(std::u32string_view digits, int base) {
  if (digits.empty()) return std::nullopt;
  std::uint32_t value = 0;
  for (char32_t d : digits) {
    int v;
    if (d >= '0' && d <= '9') {
      v = static_cast<int>(d - '0');
    } else if (base == 16 && d >= 'a' && d <= 'f') {
      v = static_cast<int>(d - 'a' + 10);
    } else if (base == 16 && d >= 'A' && d <= 'F') {
      v = static_cast<int>(d - 'A' + 10);
    } else {
      return std::nullopt;
    }
    value = std::min<std::uint32_t>(value * base + v, 0x110000);
  }
  if (value == 0 || value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    return kReplacementCharacter;
  }
  return static_cast<char32_t>(value);
}

// Named references supported: amp, lt, gt, quot, apos; plus &#N; and &#xH;.
std::optional<char32_t> resolve_reference(std::u32string_view name) {
  if (name == U"amp") return U'&';
  if (name == U"lt") return U'<';
  if (name == U"gt") return U'>';
  if (name == U"quot") return U'"';
  if (name == U"apos") return U'\'';
  if (name.size() >= 2 && name[0] == '#') {
    if (name[1] == 'x' || name[1] == 'X') return parse_number(name.substr(2), 16);
    return parse_number(name.substr(1), 10);
  }
  return std::nullopt;
}

}  // namespace

CharClass classify(std::optional<char32_t> ch) {
  if (!ch) return C::kEndOfFile;
  char32_t c = *ch;
  switch (c) {
    case '\t':
    case '\n':
    case '\f':
    case '\r':
    case ' ': return C::kWhitespace;
    case 0: return C::kNull;
    case '&': return C::kAmpersand;
    case '<': return C::kLessThan;
    case '>': return C::kGreaterThan;
    case '/': return C::kSolidus;
    case '!': return C::kBang;
    case '-': return C::kHyphen;
    case '=': return C::kEquals;
    case '"': return C::kDoubleQuote;
    case '\'': return C::kSingleQuote;
    case ';': return C::kSemicolon;
    case '#': return C::kNumberSign;
    default: break;
  }
  if (c >= '0' && c <= '9') return C::kDigit;
  if (c >= 'A' && c <= 'Z') return C::kUpperAlpha;
  if (c >= 'a' && c <= 'z') return C::kLowerAlpha;
  return C::kOther;
}

std::string_view state_name(TokenizerState state) {
  static constexpr std::string_view kNames[] = {
      "Data",
      "TagOpen",
      "EndTagOpen",
      "TagName",
      "BeforeAttributeName",
      "AttributeName",
      "AfterAttributeName",
      "BeforeAttributeValue",
      "AttributeValueDoubleQuoted",
      "AttributeValueSingleQuoted",
      "AttributeValueUnquoted",
      "AfterAttributeValueQuoted",
      "SelfClosingStartTag",
      "MarkupDeclarationOpen",
      "CommentStart",
      "CommentBody",
      "CommentEnd",
      "CharacterReference",
      "ScriptData",
      "ScriptDataEndTagOpen",
      "ScriptDataEndTagName",
  };
  return kNames[static_cast<std::size_t>(state)];
}

const TokenizerRule* tokenizer_rule(TokenizerState state, CharClass cls) {
  return grid()[static_cast<std::size_t>(state)][static_cast<std::size_t>(cls)];
}

void Tokenizer::feed(std::string_view utf8_chunk) { input_.feed(utf8_decode(utf8_chunk)); }

void Tokenizer::insert_at_insertion_point(std::string_view utf8_text) {
  input_.insert(utf8_decode(utf8_text));
}

StepResult Tokenizer::next_token() {
  while (true) {
    if (!queue_.empty()) {
      Token token = std::move(queue_.front());
      queue_.pop_front();
      return Emitted{std::move(token)};
    }
    if (eof_emitted_) {
      finished_ = true;
      return Finished{};
    }
    std::optional<char32_t> ch;
    if (reconsume_) {
      ch = *reconsume_;
      reconsume_.reset();
    } else if (auto next = input_.next()) {
      ch = next;
    } else if (!input_.ended()) {
      return NeedMoreInput{};
    }
    step(ch);
  }
}

void Tokenizer::step(std::optional<char32_t> ch) {
  CharClass cls = classify(ch);
  const TokenizerRule* rule = tokenizer_rule(state_, cls);
  redirect_.reset();
  redirect_reconsume_ = false;
  skip_remaining_actions_ = false;
  for (TokenizerAction action : rule->actions) {
    if (action == A::kNone) continue;
    apply(action, ch, cls);
    if (skip_remaining_actions_) break;
  }
  TokenizerState next = redirect_.value_or(rule->next);
  bool reconsume = redirect_ ? redirect_reconsume_ : rule->reconsume;
  state_ = next;
  if (reconsume) {
    reconsume_ = ch;
  } else if (ch && in_raw_run(next)) {
    raw_.push_back(*ch);
  }
}

bool Tokenizer::returns_to_attribute() const {
  return return_state_ == S::kAttributeValueDoubleQuoted ||
         return_state_ == S::kAttributeValueSingleQuoted ||
         return_state_ == S::kAttributeValueUnquoted;
}

bool Tokenizer::in_raw_run(TokenizerState state) const {
  switch (state) {
    case S::kTagOpen:
    case S::kEndTagOpen:
    case S::kTagName:
    case S::kBeforeAttributeName:
    case S::kAttributeName:
    case S::kAfterAttributeName:
    case S::kBeforeAttributeValue:
    case S::kAttributeValueDoubleQuoted:
    case S::kAttributeValueSingleQuoted:
    case S::kAttributeValueUnquoted:
    case S::kAfterAttributeValueQuoted:
    case S::kSelfClosingStartTag:
    case S::kScriptDataEndTagOpen:
    case S::kScriptDataEndTagName:
      return true;
    case S::kCharacterReference:
      return returns_to_attribute();
    default:
      return false;
  }
}

void Tokenizer::emit_chars(std::u32string_view chars) {
  for (char32_t c : chars) emit(Character{c});
}

void Tokenizer::emit_tag() {
  if (tag_.is_end) {
    bool script = tag_.name == "script";
    emit(EndTag{std::move(tag_.name)});
    if (script) input_.mark_insertion_point();
  } else {
    StartTag start{std::move(tag_.name), {}, tag_.self_closing};
    std::unordered_set<std::string> seen;
    for (auto& attribute : tag_.attributes) {
      if (seen.insert(attribute.name).second) start.attributes.push_back(std::move(attribute));
    }
    if (start.name == "script" && !start.self_closing) redirect_ = S::kScriptData;
    emit(std::move(start));
  }
  tag_ = PartialTag{};
  raw_.clear();
}

void Tokenizer::emit_markup_declaration() {
  std::string text = utf8_encode(markup_);
  markup_.clear();
  std::string lowered = text;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered.rfind("doctype", 0) == 0) {
    std::string rest = lowered.substr(7);
    auto begin = rest.find_first_not_of(" \t\n\f\r");
    std::string name;
    if (begin != std::string::npos) {
      auto end = rest.find_first_of(" \t\n\f\r", begin);
      name = rest.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
    }
    emit(Doctype{std::move(name)});
    return;
  }
  emit(Comment{std::move(text)});
}

void Tokenizer::finish_char_ref(std::u32string_view replacement) {
  if (returns_to_attribute()) {
    tag_.attributes.back().value += utf8_encode(replacement);
  } else {
    emit_chars(replacement);
  }
  char_ref_.clear();
}

void Tokenizer::apply(TokenizerAction action, std::optional<char32_t> ch, CharClass) {
  switch (action) {
    case A::kNone:
      break;
    case A::kEmitChar:
      emit(Character{*ch});
      break;
    case A::kEmitEof:
      emit(EndOfStream{});
      eof_emitted_ = true;
      break;
    case A::kStartRaw:
    case A::kClearRaw:
      raw_.clear();
      break;
    case A::kEmitRawAsChars:
      emit_chars(raw_);
      raw_.clear();
      break;
    case A::kCreateStartTag:
      tag_ = PartialTag{};
      break;
    case A::kCreateEndTag:
      tag_ = PartialTag{};
      tag_.is_end = true;
      break;
    case A::kAppendTagName:
      utf8_append(tag_.name, ascii_lower(scrub_null(*ch)));
      break;
    case A::kStartAttribute:
      tag_.attributes.emplace_back();
      break;
    case A::kAppendAttributeName:
      utf8_append(tag_.attributes.back().name, ascii_lower(scrub_null(*ch)));
      break;
    case A::kAppendAttributeValue:
      utf8_append(tag_.attributes.back().value, scrub_null(*ch));
      break;
    case A::kSetSelfClosing:
      tag_.self_closing = true;
      break;
    case A::kEmitTag:
      emit_tag();
      break;
    case A::kClearMarkup:
      markup_.clear();
      break;
    case A::kMarkupHyphen:
      if (markup_ == U"-") {
        markup_.clear();
        comment_.clear();
        comment_dashes_ = 0;
        redirect_ = S::kCommentStart;
      } else {
        markup_.push_back(U'-');
      }
      break;
    case A::kAppendMarkup:
      markup_.push_back(scrub_null(*ch));
      break;
    case A::kEmitMarkup:
      emit_markup_declaration();
      break;
    case A::kCommentDash:
      ++comment_dashes_;
      break;
    case A::kFlushCommentDashes:
      comment_.append(comment_dashes_, '-');
      comment_dashes_ = 0;
      break;
    case A::kCommentEndGreater:
      if (comment_dashes_ >= 2) {
        comment_.append(comment_dashes_ - 2, '-');
        comment_dashes_ = 0;
        emit(Comment{std::move(comment_)});
        comment_.clear();
      } else {
        comment_ += "->";
        comment_dashes_ = 0;
        redirect_ = S::kCommentBody;
      }
      break;
    case A::kAppendComment:
      utf8_append(comment_, scrub_null(*ch));
      break;
    case A::kEmitComment:
      emit(Comment{std::move(comment_)});
      comment_.clear();
      comment_dashes_ = 0;
      break;
    case A::kBeginCharRef:
      return_state_ = state_;
      char_ref_ = U"&";
      break;
    case A::kAppendCharRef:
      char_ref_.push_back(*ch);
      if (char_ref_.size() > 32) {
        finish_char_ref(char_ref_);
        redirect_ = return_state_;
      }
      break;
    case A::kResolveCharRef: {
      auto resolved = resolve_reference(std::u32string_view(char_ref_).substr(1));
      std::u32string replacement = resolved ? std::u32string(1, *resolved) : char_ref_ + U";";
      finish_char_ref(replacement);
      redirect_ = return_state_;
      break;
    }
    case A::kFlushCharRef:
      finish_char_ref(char_ref_);
      redirect_ = return_state_;
      redirect_reconsume_ = true;
      break;
    case A::kClearScriptEndTag:
      script_end_name_.clear();
      break;
    case A::kAppendScriptEndTag:
      utf8_append(script_end_name_, ascii_lower(*ch));
      break;
    case A::kScriptEndTagBoundary:
      if (script_end_name_ == "script") {
        tag_ = PartialTag{};
        tag_.is_end = true;
        tag_.name = "script";
      } else {
        emit_chars(raw_);
        raw_.clear();
        redirect_ = S::kScriptData;
        redirect_reconsume_ = true;
        skip_remaining_actions_ = true;
      }
      break;
  }
}

std::vector<Token> tokenize(std::string_view document) {
  Tokenizer tokenizer;
  tokenizer.feed(document);
  tokenizer.end_stream();
  std::vector<Token> tokens;
  while (true) {
    StepResult result = tokenizer.next_token();
    if (auto* emitted = std::get_if<Emitted>(&result)) {
      tokens.push_back(std::move(emitted->token));
    } else {
      break;
    }
  }
  return tokens;
}

}  // namespace weft
