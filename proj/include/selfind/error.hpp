#pragma once

#include <stdexcept>
#include <string>

namespace selfind {

// Mirrors the status codes of the C API (selfind.h); keep the numbering in sync.
enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  degenerate_curve = 3,
  unsupported_curve = 4,
  separation = 5,
  proximity = 6,
  domain = 7,
  divergent_domain = 8,
  fit = 9,
  counter_term_mismatch = 10,
  extrapolation = 11,
  locality = 12,
  tolerance = 13,
  io = 14,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace selfind
