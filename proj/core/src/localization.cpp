#include "renvol/localization.hpp"

#include <stdexcept>

#include "renvol/quadrature.hpp"

namespace renvol {

AlphaRecord make_alpha_record(const Rational& beta) {
  return {Rational{1} - beta, beta};
}

BigFloat localized_integral(const ModelParams& p, const Cutoff& c, mpfr_prec_t precision) {
  p.validate();
  if (p.beta == Rational{1}) return BigFloat::of(0, precision);
  const mpfr_prec_t wp = precision + 32;
  const long m = static_cast<long>(p.n) + 1;
  const Rational amplitude = (Rational{1} - p.beta).pow(m) * p.volL;

  const unsigned n = p.n;
  const Integrand f = [&c, n](const BigFloat& t) {
    const BigFloat slope = cutoff_psi_prime(c, t);
    return BigFloat::of(static_cast<long>(n) + 1, t.precision()) *
           slope.pow_si(static_cast<long>(n)) * cutoff_psi_second(c, t);
  };
  // The integrand vanishes outside the transition window, so integrate
  // exactly over it; its value is −1 up to quadrature error.
  const BigFloat t_integral =
      integrate(f, BigFloat::of(c.t1, wp), BigFloat::of(c.t2, wp), wp,
                BigFloat::pow2(-static_cast<long>(precision) + 8, wp));
  return (BigFloat::of(amplitude, wp) * t_integral).to_precision(precision);
}

IndependenceReport cutoff_independence(const ModelParams& p, const std::vector<Cutoff>& cutoffs,
                                       mpfr_prec_t precision) {
  if (cutoffs.size() < 2) {
    throw std::invalid_argument("cutoff_independence needs at least two cutoffs");
  }
  const mpfr_prec_t wp = precision + 32;
  std::vector<BigFloat> values;
  values.reserve(cutoffs.size());
  for (const auto& c : cutoffs) values.push_back(localized_integral(p, c, wp));

  BigFloat max_dev = BigFloat::of(0, wp);
  BigFloat max_abs = BigFloat::of(0, wp);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].abs() > max_abs) max_abs = values[i].abs();
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const BigFloat dev = (values[i] - values[j]).abs();
      if (dev > max_dev) max_dev = dev;
    }
  }
  // 10^{−precision/16}, relative to the largest value.
  const BigFloat ten = BigFloat::of(10, wp);
  BigFloat tol = (BigFloat::of(-static_cast<long>(precision) / 16, wp) * ten.log()).exp();
  if (max_abs.sign() > 0) tol = tol * max_abs;
  IndependenceReport report{{}, max_dev.to_precision(precision), tol.to_precision(precision),
                            max_dev <= tol};
  for (auto& v : values) report.values.push_back(v.to_precision(precision));
  return report;
}

}  // namespace renvol
