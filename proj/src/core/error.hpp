#pragma once

#include <stdexcept>
#include <string>

namespace ng {

// Error categories surfaced through the C API as status codes.
enum class ErrorCode {
    usage = 1,     // malformed input text, bad flag values
    domain = 2,    // precondition on mathematical arguments violated
    internal = 3,  // broken internal invariant; always a bug
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrorCode::usage, msg); }
[[noreturn]] inline void fail_domain(const std::string& msg) { throw Error(ErrorCode::domain, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrorCode::internal, msg); }

// Always-on invariant check for exact identities that can never fail for
// valid inputs; a failure means the implementation (not the caller) is wrong.
inline void check_internal(bool ok, const char* what) {
    if (!ok) fail_internal(std::string("internal invariant violated: ") + what);
}

}  // namespace ng
