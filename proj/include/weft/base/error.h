#pragma once

#include <stdexcept>
#include <string>

namespace weft {

// Root of every error the engine throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An Error tagged with a module-specific code enum.
template <typename Code>
class CodedError : public Error {
 public:
  CodedError(Code code, const std::string& message)
      : Error(message), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

}  // namespace weft
