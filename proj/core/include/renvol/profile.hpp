#pragma once

#include <optional>
#include <vector>

#include "renvol/big_float.hpp"
#include "renvol/rational.hpp"

namespace renvol {

/// Momentum profile of the complete Kähler-Einstein metric on the disc
/// bundle, in reduced form: V(τ) = τ² + (β/(n+1))·τ + capC·τ^{−n} on
/// τ > tau0, with V(tau0) = 0 and V'(tau0) = 1 (smooth cap across the zero
/// section) and ODE V' + n·V/τ = β + (n+2)·τ.
struct Profile {
  unsigned n;
  Rational beta;
  Rational tau0;  // (1−β)/(n+2)
  Rational capC;  // −tau0^n·(tau0² + (β/(n+1))·tau0)
};

/// Throws no_complete_metric_error unless beta < 1.
Profile build_profile(unsigned n, const Rational& beta);

/// Exact V(τ). τ = 0 is outside the domain when n ≥ 1.
Rational profile_V(const Profile& p, const Rational& tau);

/// Exact residual of V' + n·V/τ − β − (n+2)·τ; zero for a well-built profile.
Rational profile_ode_residual(const Profile& p, const Rational& tau);

struct PositivityScan {
  bool positive;
  std::optional<Rational> witness;  // first τ with V(τ) ≤ 0, if any
};

/// Checks V > 0 on a log-spaced rational grid τ = tau0 + 10⁶·(9/10)^i,
/// i = 0..samples−1, descending toward the cap.
PositivityScan positivity_scan(const Profile& p, unsigned samples);

/// Exact tail coefficients a₁..a_K of the anchored potential gauge:
/// F(τ) − log τ − Σ aₖ τ^{−k} → 0 as τ → ∞. Computed by series division of
/// τ/V(τ) in u = 1/τ.
std::vector<Rational> asymptotic_tail(const Profile& p, unsigned k_terms);

/// Closed form aₖ = (−1)^{k+1}·(β/(n+1))^k / k, valid for 1 ≤ k ≤ n+1
/// (capC first enters at k = n+2).
Rational tail_closed_form(unsigned n, const Rational& beta, unsigned k);

/// Potential F(τ) = ∫ s/V(s) ds in the anchored gauge, for τ > tau0.
/// The gauge head log τ + Σ aₖ τ^{−k} is evaluated directly; the remainder
/// is a proper integral in u = 1/s over [0, 1/τ] of an exactly cancelled
/// rational integrand, so no numerical-infinity endpoint appears.
BigFloat potential_F(const Profile& p, const BigFloat& tau, mpfr_prec_t precision);

/// e^{−F(τ)}, the level-set label of τ.
BigFloat eps_of_tau(const Profile& p, const BigFloat& tau, mpfr_prec_t precision);

/// Solves F(τ) = −log ε for τ > tau0: bisection bracket, then Newton with
/// the exact derivative dF/dτ = τ/V. Throws std::invalid_argument when eps
/// lies outside the reachable range of the bracket search.
BigFloat tau_of_eps(const Profile& p, const BigFloat& eps, mpfr_prec_t precision);

}  // namespace renvol
