#pragma once

#include <vector>

#include "renvol/big_float.hpp"
#include "renvol/cutoff.hpp"
#include "renvol/params.hpp"

namespace renvol {

/// Connection-form normalization for the tube: the boundary Sasakian
/// structure forces 2πα = 1 − β, and the divisor relation
/// c₁(K_D) = (1 − 2πα)·c₁(N) then carries the factor β.
struct AlphaRecord {
  Rational two_pi_alpha;     // 1 − β
  Rational canonical_factor; // 1 − two_pi_alpha = β
};

AlphaRecord make_alpha_record(const Rational& beta);

/// Compactly supported Chern-number integral for the tube, with the S¹ and
/// base directions integrated out exactly: the numeric part is the 1-D
/// integral ∫(n+1)·ψ'ⁿ·ψ'' dt over the transition window, multiplied by the
/// exact amplitude (1−β)^{n+1}·Vol(L). β = 1 returns exactly 0.
BigFloat localized_integral(const ModelParams& p, const Cutoff& c, mpfr_prec_t precision);

struct IndependenceReport {
  std::vector<BigFloat> values;
  BigFloat max_deviation;  // max pairwise |vᵢ − vⱼ|
  BigFloat tolerance;      // 10^{−precision/16} · max |vᵢ|
  bool within;
};

/// Cohomological independence check: the localized integral across distinct
/// cutoffs. Requires at least two.
IndependenceReport cutoff_independence(const ModelParams& p, const std::vector<Cutoff>& cutoffs,
                                       mpfr_prec_t precision);

}  // namespace renvol
