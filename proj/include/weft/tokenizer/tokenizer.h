#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weft/tokenizer/input_stream.h"
#include "weft/tokenizer/token.h"

namespace weft {

enum class TokenizerState : std::uint8_t {
  kData,
  kTagOpen,
  kEndTagOpen,
  kTagName,
  kBeforeAttributeName,
  kAttributeName,
  kAfterAttributeName,
  kBeforeAttributeValue,
  kAttributeValueDoubleQuoted,
  kAttributeValueSingleQuoted,
  kAttributeValueUnquoted,
  kAfterAttributeValueQuoted,
  kSelfClosingStartTag,
  kMarkupDeclarationOpen,
  kCommentStart,
  kCommentBody,
  kCommentEnd,
  kCharacterReference,
  kScriptData,
  kScriptDataEndTagOpen,
  kScriptDataEndTagName,
};
inline constexpr std::size_t kTokenizerStateCount = 21;

// Input characters are classified before rule lookup; kEndOfFile stands for
// "input exhausted and the stream has ended".
enum class CharClass : std::uint8_t {
  kWhitespace,
  kNull,
  kAmpersand,
  kLessThan,
  kGreaterThan,
  kSolidus,
  kBang,
  kHyphen,
  kEquals,
  kDoubleQuote,
  kSingleQuote,
  kSemicolon,
  kNumberSign,
  kDigit,
  kUpperAlpha,
  kLowerAlpha,
  kOther,
  kEndOfFile,
};
inline constexpr std::size_t kCharClassCount = 18;

CharClass classify(std::optional<char32_t> ch);
std::string_view state_name(TokenizerState state);

enum class TokenizerAction : std::uint8_t {
  kNone,
  kEmitChar,
  kEmitEof,
  kStartRaw,
  kClearRaw,
  kEmitRawAsChars,
  kCreateStartTag,
  kCreateEndTag,
  kAppendTagName,
  kStartAttribute,
  kAppendAttributeName,
  kAppendAttributeValue,
  kSetSelfClosing,
  kEmitTag,
  kClearMarkup,
  kMarkupHyphen,
  kAppendMarkup,
  kEmitMarkup,
  kCommentDash,
  kFlushCommentDashes,
  kCommentEndGreater,
  kAppendComment,
  kEmitComment,
  kBeginCharRef,
  kAppendCharRef,
  kResolveCharRef,
  kFlushCharRef,
  kClearScriptEndTag,
  kAppendScriptEndTag,
  kScriptEndTagBoundary,
};

// One entry of the transition table. Some actions redirect the transition
// at run time (returning from a character reference, recognising "--" or
// the script end tag); `next` is the destination when they do not.
struct TokenizerRule {
  std::array<TokenizerAction, 3> actions{};
  TokenizerState next = TokenizerState::kData;
  bool reconsume = false;
};

// nullptr marks a gap; the table is expected to have none.
const TokenizerRule* tokenizer_rule(TokenizerState state, CharClass cls);

struct Emitted {
  Token token;
};
struct NeedMoreInput {};
struct Finished {};
using StepResult = std::variant<Emitted, NeedMoreInput, Finished>;

// Suspendable HTML tokenizer. Every step consumes at most one character and
// all progress lives in member state, so the machine can stop whenever input
// runs dry and resume on the next feed. Copying a Tokenizer snapshots it.
class Tokenizer {
 public:
  void feed(std::u32string_view chunk) { input_.feed(chunk); }
  void feed(std::string_view utf8_chunk);

  // Splices script-written text at the insertion point.
  void insert_at_insertion_point(std::u32string_view text) { input_.insert(text); }
  void insert_at_insertion_point(std::string_view utf8_text);

  void end_stream() { input_.end(); }

  StepResult next_token();

  TokenizerState state() const { return state_; }
  const InputStream& input() const { return input_; }
  std::u32string_view pending_input() const { return input_.pending(); }

 private:
  struct PartialTag {
    bool is_end = false;
    std::string name;
    std::vector<Attribute> attributes;
    bool self_closing = false;
  };

  void step(std::optional<char32_t> ch);
  void apply(TokenizerAction action, std::optional<char32_t> ch, CharClass cls);
  bool in_raw_run(TokenizerState state) const;
  bool returns_to_attribute() const;

  void emit(Token token) { queue_.push_back(std::move(token)); }
  void emit_chars(std::u32string_view chars);
  void emit_tag();
  void emit_markup_declaration();
  void finish_char_ref(std::u32string_view replacement);

  InputStream input_;
  TokenizerState state_ = TokenizerState::kData;
  std::deque<Token> queue_;
  bool eof_emitted_ = false;
  bool finished_ = false;
  // Set when the last rule asked for its character to be processed again;
  // the inner nullopt is end-of-file.
  std::optional<std::optional<char32_t>> reconsume_;

  PartialTag tag_;
  std::u32string raw_;           // source text of the tag in progress
  std::u32string markup_;        // text after "<!" awaiting classification
  std::string comment_;
  std::size_t comment_dashes_ = 0;
  std::u32string char_ref_;      // "&..." being collected
  TokenizerState return_state_ = TokenizerState::kData;
  std::string script_end_name_;

  // Per-step scratch set by redirecting actions.
  std::optional<TokenizerState> redirect_;
  bool redirect_reconsume_ = false;
  bool skip_remaining_actions_ = false;
};

// Convenience: tokenizes a complete document.
std::vector<Token> tokenize(std::string_view document);

}  // namespace weft
