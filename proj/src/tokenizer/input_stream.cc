#include "weft/tokenizer/input_stream.h"

#include <algorithm>

namespace weft {

void InputStream::feed(std::u32string_view chunk) {
  if (ended_) throw TokenizerError(TokenizerErrc::kFedAfterEnd, "feed after end of stream");
  compact();
  buffer_.append(chunk);
  total_fed_ += chunk.size();
}

void InputStream::insert(std::u32string_view text) {
  if (ended_) {
    throw TokenizerError(TokenizerErrc::kInsertAfterEnd, "insert at insertion point after end of stream");
  }
  std::size_t at = std::max(insertion_point_.value_or(position_), position_);
  buffer_.insert(at, text);
  insertion_point_ = at + text.size();
  total_inserted_ += text.size();
}

void InputStream::end() {
  if (ended_) throw TokenizerError(TokenizerErrc::kDoubleEnd, "end of stream signalled twice");
  ended_ = true;
}

std::optional<char32_t> InputStream::next() {
  if (position_ == buffer_.size()) return std::nullopt;
  ++consumed_;
  return buffer_[position_++];
}

void InputStream::compact() {
  if (position_ < 4096 || position_ * 2 < buffer_.size()) return;
  buffer_.erase(0, position_);
  if (insertion_point_) {
    *insertion_point_ = *insertion_point_ > position_ ? *insertion_point_ - position_ : 0;
  }
  position_ = 0;
}

}  // namespace weft
