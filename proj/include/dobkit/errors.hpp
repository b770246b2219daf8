#pragma once

#include <stdexcept>
#include <string>

namespace dobkit {

// Base for every failure the library raises on purpose. Callers that only
// need a coarse success/numerical-failure split can catch this one type.
struct DobError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// poly
struct ZeroPolynomialError : DobError {
  using DobError::DobError;
};
struct NonConvergenceError : DobError {
  using DobError::DobError;
};

// xfer
struct PoleHitError : DobError {
  using DobError::DobError;
};
struct DegenerateLoopError : DobError {
  using DobError::DobError;
};
struct DomainMismatchError : DobError {
  using DobError::DobError;
};
struct ImproperTfError : DobError {
  using DobError::DobError;
};

// bode
struct TailDivergenceError : DobError {
  using DobError::DobError;
};
struct MarginalPoleError : DobError {
  using DobError::DobError;
};
struct SingularityAtGridEdgeError : DobError {
  using DobError::DobError;
};

// rootlocus
struct BadBracketError : DobError {
  using DobError::DobError;
};
struct NoCrossingError : DobError {
  using DobError::DobError;
};

// cli / config files
struct ConfigError : std::runtime_error {
  ConfigError(const std::string& what, int line = -1)
      : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_number(line) {}
  int line_number;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dobkit
