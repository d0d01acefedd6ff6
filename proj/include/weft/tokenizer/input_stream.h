#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "weft/base/error.h"

namespace weft {

enum class TokenizerErrc { kFedAfterEnd, kInsertAfterEnd, kDoubleEnd };
using TokenizerError = CodedError<TokenizerErrc>;

// Characters waiting to be tokenized. Network chunks are appended at the
// end; script-written text is spliced in at the insertion point, which the
// tokenizer places right after each script end tag.
class InputStream {
 public:
  void feed(std::u32string_view chunk);
  void insert(std::u32string_view text);
  void end();

  std::optional<char32_t> next();

  void mark_insertion_point() { insertion_point_ = position_; }

  bool ended() const { return ended_; }
  bool exhausted() const { return position_ == buffer_.size(); }

  std::u32string_view pending() const {
    return std::u32string_view(buffer_).substr(position_);
  }

  std::size_t consumed() const { return consumed_; }
  std::size_t pending_size() const { return buffer_.size() - position_; }
  std::size_t total_fed() const { return total_fed_; }
  std::size_t total_inserted() const { return total_inserted_; }

 private:
  void compact();

  std::u32string buffer_;
  std::size_t position_ = 0;
  std::optional<std::size_t> insertion_point_;
  bool ended_ = false;
  std::size_t consumed_ = 0;
  std::size_t total_fed_ = 0;
  std::size_t total_inserted_ = 0;
};

}  // namespace weft
