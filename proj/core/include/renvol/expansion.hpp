#pragma once

#include <map>
#include <vector>

#include "renvol/big_float.hpp"
#include "renvol/params.hpp"
#include "renvol/pi_value.hpp"
#include "renvol/profile.hpp"
#include "renvol/rational.hpp"

namespace renvol {

/// Exact ε-expansion of the tube volume
///
///   Vol(Ω^ε) = scale·( Σ_j laurent[j]·ε^j + constant + Σ_k tail[k]·ε^{k+1} ) + ...
///
/// in the module's volume normalization Vol = ∫ω^{n+1} (no 1/(n+1)!), so
/// scale = (2π)^{n+1}·Vol(L). Negative exponents run exactly from −(n+1) to
/// −1. The basis is pure powers of ε: the construction (series reversion of
/// ε(τ)) cannot produce a log ε term, and the carrier type has no slot for
/// one.
struct Expansion {
  unsigned n;
  PiValue scale;
  std::map<int, Rational> laurent;     // exponents −(n+1)..−1
  Rational constant;                   // ε⁰ coefficient; scale·constant is the renormalized volume
  std::vector<Rational> positive_tail; // ε¹..ε^order
  Rational remainder_coeff;            // first omitted coefficient, for the heuristic bound
};

/// Builds the expansion by reverting ε(τ) = e^{−F(τ)} in exact arithmetic:
/// tail coefficients from the profile gauge, ε(u) = u·exp(−Σ aₖuᵏ), then
/// τ_ε^{n+1} = u(ε)^{−(n+1)} term by term. `order` is the number of positive
/// ε-powers kept. Requires beta < 1.
Expansion expansion_exact(const ModelParams& p, unsigned order = 3);

/// scale·constant as an exact π-graded value.
PiValue renormalized_volume_from_expansion(const Expansion& e);

/// Partial sum at a numeric ε, including the scale.
BigFloat expansion_eval(const Expansion& e, const BigFloat& eps, mpfr_prec_t precision);

/// Heuristic remainder magnitude |remainder_coeff|·ε^{order+1}·|scale|; a
/// first-omitted-term estimate, not a proven bound.
BigFloat expansion_remainder_hint(const Expansion& e, const BigFloat& eps, mpfr_prec_t precision);

/// Independent numeric pipeline: (2π)^{n+1}·volL·(τ_ε^{n+1} − τ₀^{n+1}) with
/// τ_ε from the level-set solver.
BigFloat vol_of_eps_numeric(const ModelParams& p, const Profile& profile, const BigFloat& eps,
                            mpfr_prec_t precision);

}  // namespace renvol
