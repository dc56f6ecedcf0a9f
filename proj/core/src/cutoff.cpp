#include "renvol/cutoff.hpp"

#include <stdexcept>

namespace renvol {

namespace {

Rational binomial(unsigned long n, unsigned long k) {
  return Rational::factorial(n) / (Rational::factorial(k) * Rational::factorial(n - k));
}

BigFloat eval_poly(const std::vector<Rational>& coeffs, const BigFloat& s) {
  const mpfr_prec_t prec = s.precision();
  BigFloat acc = BigFloat::of(0, prec);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * s + BigFloat::of(*it, prec);
  }
  return acc;
}

}  // namespace

Cutoff build_cutoff(const Rational& t1, const Rational& t2, unsigned degree) {
  if (!(t1 < t2) || !(t2 < Rational{0})) {
    throw std::invalid_argument("cutoff window must satisfy t1 < t2 < 0");
  }
  if (degree < 2) throw std::invalid_argument("cutoff degree must be at least 2");
  const unsigned long a = degree - 1;
  // B(a, a) = (a−1)!² / (2a−1)!
  const Rational beta_aa =
      Rational::factorial(a - 1) * Rational::factorial(a - 1) / Rational::factorial(2 * a - 1);
  std::vector<Rational> step(2 * a, Rational{0});
  std::vector<Rational> step_prime(2 * a - 1, Rational{0});
  for (unsigned long j = 0; j < a; ++j) {
    const Rational term = binomial(a - 1, j) * Rational{(j % 2 == 0) ? 1 : -1} / beta_aa;
    step_prime[a - 1 + j] = term;
    step[a + j] = term / Rational{static_cast<long>(a + j)};
  }
  return {t1, t2, degree, std::move(step), std::move(step_prime)};
}

BigFloat cutoff_psi_prime(const Cutoff& c, const BigFloat& t) {
  const mpfr_prec_t prec = t.precision();
  const BigFloat lo = BigFloat::of(c.t1, prec);
  const BigFloat hi = BigFloat::of(c.t2, prec);
  if (t <= lo) return BigFloat::of(1, prec);
  if (t >= hi) return BigFloat::of(0, prec);
  const BigFloat s = (t - lo) / (hi - lo);
  return BigFloat::of(1, prec) - eval_poly(c.step, s);
}

BigFloat cutoff_psi_second(const Cutoff& c, const BigFloat& t) {
  const mpfr_prec_t prec = t.precision();
  const BigFloat lo = BigFloat::of(c.t1, prec);
  const BigFloat hi = BigFloat::of(c.t2, prec);
  if (t <= lo || t >= hi) return BigFloat::of(0, prec);
  const BigFloat s = (t - lo) / (hi - lo);
  return -eval_poly(c.step_prime, s) / (hi - lo);
}

}  // namespace renvol
