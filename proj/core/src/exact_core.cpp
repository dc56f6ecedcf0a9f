#include "renvol/exact_core.hpp"

namespace renvol {

PiValue eval_renvol_formula(const ModelParams& p) {
  p.validate();
  const long n = static_cast<long>(p.n);
  const Rational two_pow = Rational(2).pow(n + 1);
  const Rational boundary =
      (-(p.beta) / Rational(n + 1)).pow(n + 1) / Rational::factorial(p.n + 1);
  const Rational cap = ((Rational(1) - p.beta) / Rational(n + 2)).pow(n + 1);
  return PiValue(two_pow * (boundary - cap) * p.volL, p.n + 1);
}

PiValue eval_total_qprime(const ModelParams& p) {
  p.validate();
  const long n = static_cast<long>(p.n);
  const Rational fact2 = Rational::factorial(p.n) * Rational::factorial(p.n);
  const Rational core = (Rational(2) * p.beta / Rational(n + 1)).pow(n + 1);
  return PiValue(Rational(2) * fact2 * core * p.volL, p.n + 1);
}

Rational eval_chern_integral_general(unsigned n, const Rational& beta,
                                     const Rational& chern_number_N) {
  return (beta - Rational(1)).pow(static_cast<long>(n) + 1) * chern_number_N;
}

Rational eval_chern_integral_tube(const ModelParams& p) {
  p.validate();
  // (β−1)^{n+1} (−1)^n Vol(L) == −(1−β)^{n+1} Vol(L)
  return -((Rational(1) - p.beta).pow(static_cast<long>(p.n) + 1)) * p.volL;
}

PiValue check_decomposition(const ModelParams& p) {
  const long n = static_cast<long>(p.n);
  const PiValue lhs = eval_renvol_formula(p);

  const Rational sign = (p.n % 2 == 0) ? Rational(-1) : Rational(1);  // (−1)^{n+1}
  const Rational qprime_weight =
      sign / (Rational(2) * Rational::factorial(p.n) * Rational::factorial(p.n) *
              Rational::factorial(p.n + 1));
  const PiValue qprime_term = eval_total_qprime(p) * qprime_weight;

  // (2π/(n+2))^{n+1} carried as (2/(n+2))^{n+1} · π^{n+1}
  const PiValue chern_weight((Rational(2) / Rational(n + 2)).pow(n + 1), p.n + 1);
  const PiValue chern_term = chern_weight * eval_chern_integral_tube(p);

  return lhs - (qprime_term + chern_term);
}

}  // namespace renvol
