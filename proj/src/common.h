#pragma once

#include <stdexcept>
#include <string>

namespace mdlab {

// Error categories; capi.cpp maps these onto the C status codes.
enum class ErrorCode {
  invalid_argument = 1,
  io = 2,
  parse = 3,
  state = 4,
  numeric = 5,
  internal = 6,
};

struct Error : std::runtime_error {
  ErrorCode code;
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

inline void require(bool cond, ErrorCode c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace mdlab
