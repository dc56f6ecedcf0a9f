#pragma once

#include <optional>
#include <span>
#include <vector>

#include "renvol/big_float.hpp"

namespace renvol {

struct FitSample {
  BigFloat eps;
  BigFloat vol;
};

/// Least-squares fit of volume samples in the basis {ε^{−(n+1)}, ..., ε^{−1},
/// 1, ε}, optionally augmented with log ε. The residual norm and a condition
/// estimate are always part of the result.
struct FitResult {
  std::vector<int> exponents;          // ε-powers, in basis order
  std::vector<BigFloat> coefficients;  // matching exponents
  std::optional<BigFloat> log_coefficient;
  BigFloat residual_norm;  // ‖y − Φc‖₂
  BigFloat condition;      // max/min scaled-R diagonal, a lower bound on cond(Φ)

  const BigFloat& coefficient_of(int power) const;
};

/// Modified Gram-Schmidt QR on unit-scaled columns at extended precision.
/// Throws numeric_error when the scaled system is singular beyond the
/// precision budget (condition estimate in the message). Requires at least
/// n + 4 samples.
FitResult fit_expansion(std::span<const FitSample> samples, unsigned n, mpfr_prec_t precision,
                        bool include_log = false);

/// Default sampling grid: 12 points, log-spaced from 10^{−2} to 10^{−7}.
std::vector<BigFloat> default_eps_grid(mpfr_prec_t precision);

}  // namespace renvol
