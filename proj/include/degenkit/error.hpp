#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degenkit {

enum class ErrorKind {
  Parse,
  InvalidQuiver,
  NotTame,
  CapExceeded,
  NotMixed,
  OutOfWindow,
  NoSuchSlice,
  NotASource,
  NotASink,
  InvalidShape,
  NotAShape,
  BadPair,
  NotWild,
  BadParameters,
  NotTamePlusW,
  BadContext,
  BadPlan,
  UnknownSuite,
  Overflow,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can print a
// stable one-line reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace degenkit
