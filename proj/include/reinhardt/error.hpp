#pragma once

#include <stdexcept>
#include <string>

namespace reinhardt {

enum class ErrorCode {
  invalid_input = 1,           // malformed spec, bad flag values, violated preconditions
  empty_domain = 2,            // the log-polyhedron of a spec has no interior
  boundary_indeterminate = 3,  // interval comparison straddles equality at the precision cap
  internal = 4,                // a self-check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::invalid_input, what);
}

}  // namespace reinhardt
