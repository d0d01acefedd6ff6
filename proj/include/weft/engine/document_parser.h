#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weft/dom/tree_builder.h"
#include "weft/engine/script.h"
#include "weft/tokenizer/tokenizer.h"

namespace weft {

// Tokenizer, tree builder and script runner. Parsing stops at each closing
// </script> until the script has run: its writes are spliced in at the
// insertion point, and its mutation commands are kept for after the load.
class DocumentParser {
 public:
  explicit DocumentParser(bool record_tokens = false) : record_tokens_(record_tokens) {}

  void feed(std::u32string_view chunk);
  void finish();
  bool finished() const { return builder_.finished(); }

  DomTree take_tree() { return builder_.take(); }
  const DomTree& tree() const { return builder_.tree(); }

  const std::vector<ScriptCommand>& deferred_commands() const { return deferred_; }
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }
  // Resource URLs found by scanning ahead while parsing was blocked on a script.
  const std::vector<std::string>& prefetch() const { return prefetch_; }
  const std::string& token_dump() const { return token_dump_; }
  std::size_t scripts_run() const { return scripts_run_; }

 private:
  void pump();
  void run_script(const std::string& source);

  Tokenizer tokenizer_;
  TreeBuilder builder_;
  bool record_tokens_;
  std::vector<ScriptCommand> deferred_;
  std::vector<std::string> diagnostics_;
  std::vector<std::string> prefetch_;
  std::string token_dump_;
  std::size_t scripts_run_ = 0;
};

struct ParsedDocument {
  DomTree tree;
  std::vector<ScriptCommand> deferred_commands;
  std::vector<std::string> diagnostics;
  std::vector<std::string> prefetch;
  std::string token_dump;
};

// chunk_size counts code points; 0 feeds the whole document at once.
ParsedDocument parse_document(std::string_view html, std::size_t chunk_size = 0, bool record_tokens = false);

}  // namespace weft
