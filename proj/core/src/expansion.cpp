#include "renvol/expansion.hpp"

#include <stdexcept>

#include "renvol/errors.hpp"
#include "renvol/series.hpp"

namespace renvol {

Expansion expansion_exact(const ModelParams& p, unsigned order) {
  if (order < 1) throw std::invalid_argument("expansion order must be at least 1");
  p.validate();
  const Profile prof = build_profile(p.n, p.beta);  // rejects beta >= 1
  const unsigned m = p.n + 1;

  // One coefficient beyond the reported tail feeds the remainder heuristic.
  const unsigned k_terms = p.n + order + 2;
  const std::vector<Rational> tail = asymptotic_tail(prof, k_terms);

  std::vector<Rational> neg;
  neg.reserve(tail.size());
  for (const auto& ak : tail) neg.push_back(Rational{0} - ak);
  const TruncatedSeries s{1, std::move(neg), static_cast<int>(k_terms) + 1};
  const TruncatedSeries eps_of_u = exp(s).shifted(1);
  const TruncatedSeries u_of_eps = revert(eps_of_u);
  const TruncatedSeries tau_pow = u_of_eps.pow(-static_cast<long>(m));
  // tau_pow runs from ε^{−m} through ε^{k_terms − m}; order + 1 positive powers.

  const PiValue scale{Rational{2}.pow(static_cast<long>(m)) * p.volL, m};
  std::map<int, Rational> laurent;
  for (int j = -static_cast<int>(m); j <= -1; ++j) laurent[j] = tau_pow.coeff(j);
  const Rational constant = tau_pow.coeff(0) - prof.tau0.pow(static_cast<long>(m));
  std::vector<Rational> positive;
  for (unsigned k = 1; k <= order; ++k) positive.push_back(tau_pow.coeff(static_cast<int>(k)));
  const Rational remainder = tau_pow.coeff(static_cast<int>(order) + 1);
  return {p.n, scale, std::move(laurent), constant, std::move(positive), remainder};
}

PiValue renormalized_volume_from_expansion(const Expansion& e) {
  return e.scale * e.constant;
}

BigFloat expansion_eval(const Expansion& e, const BigFloat& eps, mpfr_prec_t precision) {
  const mpfr_prec_t wp = precision + 32;
  const BigFloat x = eps.to_precision(wp);
  BigFloat acc = BigFloat::of(e.constant, wp);
  for (const auto& [exponent, coeff] : e.laurent) {
    acc = acc + BigFloat::of(coeff, wp) * x.pow_si(exponent);
  }
  for (std::size_t k = 0; k < e.positive_tail.size(); ++k) {
    acc = acc + BigFloat::of(e.positive_tail[k], wp) * x.pow_si(static_cast<long>(k) + 1);
  }
  return (acc * e.scale.to_bigfloat(wp)).to_precision(precision);
}

BigFloat expansion_remainder_hint(const Expansion& e, const BigFloat& eps, mpfr_prec_t precision) {
  const mpfr_prec_t wp = precision + 32;
  const long omitted = static_cast<long>(e.positive_tail.size()) + 1;
  return (BigFloat::of(e.remainder_coeff, wp).abs() * eps.to_precision(wp).pow_si(omitted) *
          e.scale.to_bigfloat(wp).abs())
      .to_precision(precision);
}

BigFloat vol_of_eps_numeric(const ModelParams& p, const Profile& profile, const BigFloat& eps,
                            mpfr_prec_t precision) {
  p.validate();
  const mpfr_prec_t wp = precision + 32;
  const long m = static_cast<long>(p.n) + 1;
  const BigFloat tau_eps = tau_of_eps(profile, eps, wp);
  const BigFloat scale =
      (BigFloat::of(2, wp) * BigFloat::pi(wp)).pow_si(m) * BigFloat::of(p.volL, wp);
  const BigFloat level = tau_eps.pow_si(m) - BigFloat::of(profile.tau0.pow(m), wp);
  return (scale * level).to_precision(precision);
}

}  // namespace renvol
