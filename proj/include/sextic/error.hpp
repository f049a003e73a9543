#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sextic {

enum class Errc {
  NotPrime,
  BadCongruence,
  TooSmall,
  BadOrder,
  DivisionByZero,
  ZeroVector,
  OrderOverflow,
  ClosureCapExceeded,
  BadParams,
  NotSmooth,
  NotClosed,
  GuardViolated,
  WitnessNotFound,
  Parse,
};

std::string_view errc_name(Errc code);

/// Library-wide exception. The code identifies the failure class so callers
/// (notably the CLI) can map it to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sextic
