#pragma once

#include "renvol/params.hpp"
#include "renvol/pi_value.hpp"
#include "renvol/rational.hpp"

namespace renvol {

/// Renormalized volume of the tube over (Y, L):
///   V = (2π)^{n+1} [ (1/(n+1)!)(−β/(n+1))^{n+1} − ((1−β)/(n+2))^{n+1} ] Vol(L),
/// returned exactly as coeff·π^{n+1}.
PiValue eval_renvol_formula(const ModelParams& p);

/// Total Q-prime curvature of the boundary (Sasakian η-Einstein case):
///   Q̄' = 2(n!)² (2πβ/(n+1))^{n+1} Vol(L), exactly as coeff·π^{n+1}.
PiValue eval_total_qprime(const ModelParams& p);

/// Localized Chern integral for a general domain whose compact analytic set
/// is a smooth divisor D: (β−1)^{n+1} · ∫_D c₁(N_{D/Ω})^n. The Chern number
/// of the normal bundle is an input.
Rational eval_chern_integral_general(unsigned n, const Rational& beta,
                                     const Rational& chern_number_N);

/// Tube specialization: N_{D/Ω} = L^{−1}, so ∫_D c₁(N)^n = (−1)^n Vol(L) and
/// the integral simplifies to −(1−β)^{n+1} Vol(L).
Rational eval_chern_integral_tube(const ModelParams& p);

/// Residual of the decomposition
///   V − [ (−1)^{n+1}/(2(n!)²(n+1)!) · Q̄' + (2π/(n+2))^{n+1} · ∫ c̃₁^{n+1} ].
/// Identically zero for every parameter choice; a nonzero residual means a
/// formula evaluator is broken.
PiValue check_decomposition(const ModelParams& p);

}  // namespace renvol
