#include "weft/engine/document_parser.h"

#include <algorithm>

#include "weft/base/utf8.h"
#include "weft/tokenizer/prefetch.h"

namespace weft {

void DocumentParser::feed(std::u32string_view chunk) {
  tokenizer_.feed(chunk);
  pump();
}

void DocumentParser::finish() {
  tokenizer_.end_stream();
  pump();
}

void DocumentParser::pump() {
  while (true) {
    StepResult step = tokenizer_.next_token();
    auto* emitted = std::get_if<Emitted>(&step);
    if (!emitted) return;
    if (record_tokens_) {
      token_dump_ += describe_token(emitted->token);
      token_dump_ += '\n';
    }
    if (auto script = builder_.process(emitted->token)) run_script(*script);
  }
}

void DocumentParser::run_script(const std::string& source) {
  ++scripts_run_;
  for (const std::string& url : scan_prefetch(tokenizer_.pending_input())) {
    if (std::find(prefetch_.begin(), prefetch_.end(), url) == prefetch_.end()) prefetch_.push_back(url);
  }
  ParsedScript parsed = parse_script(source);
  for (auto& d : parsed.diagnostics) diagnostics_.push_back(std::move(d));
  for (auto& command : parsed.commands) {
    if (auto* write = std::get_if<WriteCommand>(&command)) {
      tokenizer_.insert_at_insertion_point(std::string_view(write->text));
    } else {
      deferred_.push_back(std::move(command));
    }
  }
}

ParsedDocument parse_document(std::string_view html, std::size_t chunk_size, bool record_tokens) {
  DocumentParser parser(record_tokens);
  std::u32string text = utf8_decode(html);
  std::u32string_view rest = text;
  if (chunk_size == 0) chunk_size = std::max<std::size_t>(rest.size(), 1);
  while (!rest.empty()) {
    std::size_t n = std::min(chunk_size, rest.size());
    parser.feed(rest.substr(0, n));
    rest.remove_prefix(n);
  }
  parser.finish();
  ParsedDocument out;
  out.deferred_commands = parser.deferred_commands();
  out.diagnostics = parser.diagnostics();
  out.prefetch = parser.prefetch();
  out.token_dump = parser.token_dump();
  out.tree = parser.take_tree();
  return out;
}

}  // namespace weft
