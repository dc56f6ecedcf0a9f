#include "renvol/profile.hpp"

#include <stdexcept>

#include "renvol/errors.hpp"
#include "renvol/quadrature.hpp"
#include "renvol/series.hpp"

namespace renvol {

namespace {

// V' + nV/τ − β − (n+2)τ, assembled from the stored coefficients.
Rational ode_lhs(const Profile& p, const Rational& tau) {
  const Rational lin = p.beta / Rational{static_cast<long>(p.n) + 1};
  const Rational v = profile_V(p, tau);
  Rational dv = Rational{2} * tau + lin;
  if (p.n >= 1) {
    dv -= Rational{static_cast<long>(p.n)} * p.capC * tau.pow(-static_cast<long>(p.n) - 1);
  }
  return dv + Rational{static_cast<long>(p.n)} * v / tau - p.beta -
         Rational{static_cast<long>(p.n) + 2} * tau;
}

// Denominator D(u) = 1 + (β/(n+1))·u + capC·u^{n+2} of g(u) = u·τ/V(τ),
// u = 1/τ, as an exact polynomial known to any order.
TruncatedSeries denominator_poly(const Profile& p, int trunc) {
  std::vector<Rational> c(static_cast<std::size_t>(trunc), Rational{0});
  c[0] = Rational{1};
  if (trunc > 1) c[1] = p.beta / Rational{static_cast<long>(p.n) + 1};
  if (static_cast<int>(p.n) + 2 < trunc) c[static_cast<std::size_t>(p.n) + 2] = p.capC;
  return {0, std::move(c), trunc};
}

// Value of an exact polynomial (series whose window covers every nonzero
// coefficient) at a BigFloat point, by Horner at the point's precision.
BigFloat eval_poly(const TruncatedSeries& s, const BigFloat& x) {
  const mpfr_prec_t prec = x.precision();
  BigFloat acc = BigFloat::of(0, prec);
  if (s.known_zero()) return acc;
  for (int e = s.trunc_order() - 1; e >= s.lead_exponent(); --e) {
    acc = acc * x + BigFloat::of(s.coeff(e), prec);
  }
  if (s.lead_exponent() != 0) acc = acc * x.pow_si(s.lead_exponent());
  return acc;
}

BigFloat profile_V_num(const Profile& p, const BigFloat& tau) {
  const mpfr_prec_t prec = tau.precision();
  BigFloat v = tau * tau +
               BigFloat::of(p.beta / Rational{static_cast<long>(p.n) + 1}, prec) * tau;
  if (p.n >= 1) {
    v = v + BigFloat::of(p.capC, prec) * tau.pow_si(-static_cast<long>(p.n));
  } else {
    v = v + BigFloat::of(p.capC, prec);
  }
  return v;
}

// Gauge head G(τ) = log τ + Σ_{k=1..K} aₖ τ^{−k}.
BigFloat gauge_head(const std::vector<Rational>& tail, const BigFloat& tau) {
  const mpfr_prec_t prec = tau.precision();
  const BigFloat u = BigFloat::of(1, prec) / tau;
  BigFloat acc = BigFloat::of(0, prec);
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
    acc = (acc + BigFloat::of(*it, prec)) * u;
  }
  return tau.log() + acc;
}

}  // namespace

Profile build_profile(unsigned n, const Rational& beta) {
  if (!(beta < Rational{1})) {
    throw no_complete_metric_error(
        "no complete Kahler-Einstein metric on the tube for beta >= 1 (got beta = " + beta.str() +
        ")");
  }
  const Rational tau0 = (Rational{1} - beta) / Rational{static_cast<long>(n) + 2};
  const Rational lin = beta / Rational{static_cast<long>(n) + 1};
  const Rational capC =
      Rational{0} - tau0.pow(static_cast<long>(n)) * (tau0 * tau0 + lin * tau0);
  return {n, beta, tau0, capC};
}

Rational profile_V(const Profile& p, const Rational& tau) {
  if (p.n >= 1 && tau == Rational{0}) {
    throw std::invalid_argument("profile_V: tau = 0 is outside the domain for n >= 1");
  }
  const Rational lin = p.beta / Rational{static_cast<long>(p.n) + 1};
  Rational v = tau * tau + lin * tau;
  if (p.n >= 1) {
    v += p.capC * tau.pow(-static_cast<long>(p.n));
  } else {
    v += p.capC;
  }
  return v;
}

Rational profile_ode_residual(const Profile& p, const Rational& tau) {
  if (tau == Rational{0}) throw std::invalid_argument("profile_ode_residual: tau must be nonzero");
  return ode_lhs(p, tau);
}

PositivityScan positivity_scan(const Profile& p, unsigned samples) {
  Rational offset{1000000};
  const Rational ratio{9, 10};
  for (unsigned i = 0; i < samples; ++i) {
    const Rational tau = p.tau0 + offset;
    if (!(profile_V(p, tau) > Rational{0})) return {false, tau};
    offset *= ratio;
  }
  return {true, std::nullopt};
}

std::vector<Rational> asymptotic_tail(const Profile& p, unsigned k_terms) {
  const int trunc = static_cast<int>(k_terms) + 1;
  const TruncatedSeries g = denominator_poly(p, trunc).inverse();
  std::vector<Rational> tail;
  tail.reserve(k_terms);
  for (unsigned k = 1; k <= k_terms; ++k) {
    tail.push_back(Rational{0} - g.coeff(static_cast<int>(k)) / Rational{static_cast<long>(k)});
  }
  return tail;
}

Rational tail_closed_form(unsigned n, const Rational& beta, unsigned k) {
  if (k < 1 || k > n + 1) {
    throw std::invalid_argument("tail closed form holds for 1 <= k <= n+1 only");
  }
  const Rational base = beta / Rational{static_cast<long>(n) + 1};
  const Rational sign{(k % 2 == 1) ? 1 : -1};
  return sign * base.pow(static_cast<long>(k)) / Rational{static_cast<long>(k)};
}

BigFloat potential_F(const Profile& p, const BigFloat& tau, mpfr_prec_t precision) {
  if (precision < 64) throw std::invalid_argument("potential_F: precision below 64 bits");
  const mpfr_prec_t wp = precision + 32;
  const BigFloat t = tau.to_precision(wp);
  if (!(t > BigFloat::of(p.tau0, wp))) {
    throw std::invalid_argument("potential_F: tau must exceed tau0");
  }
  const unsigned k_terms = p.n + 4;
  const std::vector<Rational> tail = asymptotic_tail(p, k_terms);
  const BigFloat head = gauge_head(tail, t);

  // Exact residual: with P(u) the degree-K head of g(u) = 1/D(u), the
  // correction is F − G = −∫₀^{1/τ} N(u)/(u·D(u)) du where N = 1 − P·D is a
  // polynomial starting at u^{K+1}. Low-order cancellation happens in exact
  // arithmetic, so the numeric integrand is benign near u = 0.
  const int full = static_cast<int>(k_terms) + static_cast<int>(p.n) + 4;
  const TruncatedSeries d_poly = denominator_poly(p, full);
  std::vector<Rational> head_coeffs;
  head_coeffs.push_back(Rational{1});
  for (unsigned k = 1; k <= k_terms; ++k) {
    head_coeffs.push_back(Rational{0} -
                          Rational{static_cast<long>(k)} * tail[k - 1]);  // gₖ = −k·aₖ
  }
  const TruncatedSeries p_head{0, std::move(head_coeffs), full};
  const TruncatedSeries n_poly =
      TruncatedSeries::monomial(Rational{1}, 0, full) - p_head * d_poly;
  const TruncatedSeries n_over_u = n_poly.shifted(-1);

  const BigFloat upper = BigFloat::of(1, wp) / t;
  const Integrand f = [&](const BigFloat& u) { return eval_poly(n_over_u, u) / eval_poly(d_poly, u); };
  BigFloat tol = BigFloat::pow2(-static_cast<long>(precision) + 8, wp);
  {
    const BigFloat head_mag = head.abs();
    if (head_mag > BigFloat::of(1, wp)) tol = tol * head_mag;
  }
  const BigFloat correction = integrate(f, BigFloat::of(0, wp), upper, wp, tol);
  return (head - correction).to_precision(precision);
}

BigFloat eps_of_tau(const Profile& p, const BigFloat& tau, mpfr_prec_t precision) {
  return (-potential_F(p, tau, precision + 16)).exp().to_precision(precision);
}

BigFloat tau_of_eps(const Profile& p, const BigFloat& eps, mpfr_prec_t precision) {
  if (precision < 64) throw std::invalid_argument("tau_of_eps: precision below 64 bits");
  if (!(eps.sign() > 0) || !eps.is_finite()) {
    throw std::invalid_argument("tau_of_eps: eps must be positive and finite");
  }
  const mpfr_prec_t wp = precision + 32;
  const BigFloat target = -(eps.to_precision(wp).log());
  const BigFloat tau0 = BigFloat::of(p.tau0, wp);
  const BigFloat one = BigFloat::of(1, wp);
  const BigFloat two = BigFloat::of(2, wp);
  const auto fval = [&](const BigFloat& t) { return potential_F(p, t, wp); };

  // Upper end: F ~ log τ, so 2/ε is essentially always enough.
  BigFloat hi = two / eps.to_precision(wp);
  {
    const BigFloat floor_hi = two * tau0 + one;
    if (hi < floor_hi) hi = floor_hi;
  }
  int doublings = 0;
  while (fval(hi) < target) {
    hi = hi * two;
    if (++doublings > 64) {
      throw invariant_violation("tau_of_eps: no upper bracket for the level set (gauge bug?)");
    }
  }
  // Lower end: walk down toward the cap until F drops below the target.
  BigFloat span = tau0 > one ? tau0 : one;
  BigFloat lo{wp};
  bool bracketed = false;
  for (int j = 0; j <= 60; ++j) {
    lo = tau0 + span;
    if (fval(lo) <= target) {
      bracketed = true;
      break;
    }
    hi = lo;  // tighter upper end for free (F is increasing)
    span = span / two;
  }
  if (!bracketed) {
    throw std::invalid_argument("tau_of_eps: eps outside the reachable level-set range");
  }

  // Bisection until Newton is safe.
  for (int i = 0; i < 120; ++i) {
    const BigFloat mid = (lo + hi) / two;
    if ((hi - lo) < mid.abs() * BigFloat::pow2(-24, wp)) break;
    if (fval(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Newton with dF/dτ = τ/V, keeping the bracket as a safety net.
  BigFloat t = (lo + hi) / two;
  const BigFloat done = BigFloat::pow2(-static_cast<long>(precision) + 8, wp);
  for (int i = 0; i < 80; ++i) {
    const BigFloat residual = fval(t) - target;
    const BigFloat step = residual * profile_V_num(p, t) / t;
    if (step.abs() <= t.abs() * done) return (t - step).to_precision(precision);
    if (residual.sign() < 0) {
      lo = t;
    } else {
      hi = t;
    }
    BigFloat next = t - step;
    if (!(next > lo) || !(next < hi)) next = (lo + hi) / two;
    t = next;
  }
  throw numeric_error("tau_of_eps: Newton refinement failed to converge");
}

}  // namespace renvol
