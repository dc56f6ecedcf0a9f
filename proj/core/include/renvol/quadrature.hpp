#pragma once

#include <functional>
#include <vector>

#include "renvol/big_float.hpp"

namespace renvol {

using Integrand = std::function<BigFloat(const BigFloat&)>;

/// Adaptive Gauss-Legendre integral of f over [a, b] with absolute error
/// target abs_tol. Panels use a fixed 32-node rule at `precision` plus guard
/// bits; an interval is accepted when the whole-panel value agrees with the
/// two half-panel values within its share of the tolerance. Throws
/// numeric_error when the recursion depth budget is exhausted.
BigFloat integrate(const Integrand& f, const BigFloat& a, const BigFloat& b,
                   mpfr_prec_t precision, const BigFloat& abs_tol);

/// Same, but every panel is first split at the given interior break points
/// (useful when the integrand has limited smoothness at known locations).
BigFloat integrate_with_breaks(const Integrand& f, const BigFloat& a, const BigFloat& b,
                               const std::vector<BigFloat>& breaks, mpfr_prec_t precision,
                               const BigFloat& abs_tol);

}  // namespace renvol
