#pragma once

#include <stdexcept>
#include <string>

namespace renvol {

/// Requested parameters admit no complete Kahler-Einstein metric (beta >= 1).
class no_complete_metric_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact identity that must hold was violated. CLI exit code 2.
class invariant_violation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric routine failed to converge within its budget (quadrature depth,
/// root bracketing, ill-conditioned fit). CLI exit code 3.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace renvol
