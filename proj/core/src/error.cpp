#include "fwm/error.hpp"

namespace fwm {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NumericalInstability: return "NumericalInstability";
    case Errc::NotResonant: return "NotResonant";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::TruncationTooLarge: return "TruncationTooLarge";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::OnBoundary: return "OnBoundary";
    case Errc::OutOfInterval: return "OutOfInterval";
    case Errc::ZeroCoupling: return "ZeroCoupling";
    case Errc::UnsupportedRegime: return "UnsupportedRegime";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace fwm
