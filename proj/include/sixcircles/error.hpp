#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sixcircles {

enum class ErrorCode {
  NonPositiveSide,
  TriangleInequalityViolated,
  NotConvex,
  InvalidParameters,
  RadicandNegative,
  NegativeRoot,
  NotConstructible,
  DegenerateCircle,
  DomainExceeded,
  MaxIterExceeded,
  NoRoot,
  NoConvergence,
  OrbitTerminated,
  BadScenario,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by the geometry and dynamics routines.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sixcircles
