#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fwm {

enum class Errc {
  InvalidLabel,
  IndexOutOfRange,
  NumericalInstability,
  NotResonant,
  ShapeMismatch,
  TruncationTooLarge,
  NoConvergence,
  OnBoundary,
  OutOfInterval,
  ZeroCoupling,
  UnsupportedRegime,
  SingularPoint,
  DivisionByZero,
  ConfigError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fwm
