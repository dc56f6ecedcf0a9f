#pragma once

#include <optional>
#include <string>

#include "renvol/params.hpp"
#include "renvol/pi_value.hpp"

namespace renvol {

/// Per-term comparison of the constructed expansion constant against the
/// closed formula, as exact ratios. The two terms obey different factorial
/// conventions and cannot both be 1 under a single volume normalization;
/// this report measures, it does not reconcile.
struct TermReport {
  unsigned n;
  Rational beta;
  Rational volL;
  PiValue cap_computed;    // −scale·τ₀^{n+1}
  PiValue cap_formula;     // −(2π)^{n+1}·((1−β)/(n+2))^{n+1}·Vol(L)
  Rational cap_ratio;      // computed/formula; 1 in the no-factorial convention
  PiValue boundary_computed;  // scale·(−β/(n+1))^{n+1}
  PiValue boundary_formula;   // (2π)^{n+1}·(1/(n+1)!)·(−β/(n+1))^{n+1}·Vol(L)
  std::optional<Rational> boundary_ratio;  // empty when both sides vanish (β = 0)
  std::string volume_convention;           // recorded in every report
};

TermReport compare_conventions(const ModelParams& p);

}  // namespace renvol
