#pragma once

#include <stdexcept>
#include <string>

namespace lct {

enum class ErrorCode {
  Ok = 0,
  Domain = 1,
  Config = 2,
  Unstable = 3,
  Numerical = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lct
