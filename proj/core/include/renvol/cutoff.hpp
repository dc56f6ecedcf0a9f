#pragma once

#include <vector>

#include "renvol/big_float.hpp"
#include "renvol/rational.hpp"

namespace renvol {

/// Cutoff slope ψ'(t) for the compactly supported curvature representative:
/// ψ' ≡ 1 for t ≤ t1, ψ' ≡ 0 for t ≥ t2, and a monotone smoothstep descent
/// on [t1, t2]. The transition is S(s) = I_s(a, a) (regularized incomplete
/// beta) with a = degree − 1, so degree 3 is the classic cubic 3s² − 2s³;
/// the glued ψ' is C^{degree−2}.
struct Cutoff {
  Rational t1;
  Rational t2;
  unsigned degree;
  std::vector<Rational> step;        // S(s) as exact polynomial coefficients of s^k
  std::vector<Rational> step_prime;  // S'(s) = s^{a−1}(1−s)^{a−1}/B(a,a)
};

/// Requires t1 < t2 < 0 and degree >= 2.
Cutoff build_cutoff(const Rational& t1, const Rational& t2, unsigned degree);

/// ψ'(t), in [0, 1] everywhere.
BigFloat cutoff_psi_prime(const Cutoff& c, const BigFloat& t);

/// ψ''(t) = d/dt ψ'(t); supported on [t1, t2] with ∫ψ'' dt = −1.
BigFloat cutoff_psi_second(const Cutoff& c, const BigFloat& t);

}  // namespace renvol
