#include "renvol/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "renvol/errors.hpp"

namespace renvol {

namespace {

constexpr int kOrder = 32;
constexpr int kMaxDepth = 48;
constexpr mpfr_prec_t kGuardBits = 64;

struct Rule {
  std::vector<BigFloat> nodes;    // on (-1, 1), symmetric
  std::vector<BigFloat> weights;  // positive, sum to 2
};

// Legendre P_k(x) and the derivative of P_kOrder via the standard relations.
void legendre(const BigFloat& x, BigFloat& p, BigFloat& dp, mpfr_prec_t prec) {
  BigFloat p0 = BigFloat::of(1, prec);
  BigFloat p1 = x;
  for (int k = 2; k <= kOrder; ++k) {
    BigFloat pk = (x * p1 * BigFloat::of(2 * k - 1, prec) - p0 * BigFloat::of(k - 1, prec)) /
                  BigFloat::of(k, prec);
    p0 = std::move(p1);
    p1 = std::move(pk);
  }
  p = p1;
  BigFloat one = BigFloat::of(1, prec);
  dp = (x * p1 - p0) * BigFloat::of(kOrder, prec) / (x * x - one);
}

Rule compute_rule(mpfr_prec_t prec) {
  Rule rule;
  rule.nodes.reserve(kOrder);
  rule.weights.reserve(kOrder);
  const BigFloat tiny = BigFloat::pow2(-static_cast<long>(prec) + 8, prec);
  const BigFloat one = BigFloat::of(1, prec);
  const BigFloat two = BigFloat::of(2, prec);
  const BigFloat pi = BigFloat::pi(prec);
  std::vector<std::pair<BigFloat, BigFloat>> half;  // (node, weight), node > 0
  for (int i = 1; i <= kOrder / 2; ++i) {
    // Chebyshev-type seed, then Newton.
    BigFloat x{prec};
    {
      BigFloat arg = pi * (BigFloat::of(4 * i - 1, prec) /
                           BigFloat::of(4 * kOrder + 2, prec));
      mpfr_cos(x.raw(), arg.raw(), MPFR_RNDN);
    }
    BigFloat p{prec}, dp{prec};
    for (int it = 0; it < 200; ++it) {
      legendre(x, p, dp, prec);
      BigFloat step = p / dp;
      x = x - step;
      if (step.abs() < tiny) break;
      if (it == 199) throw numeric_error("Gauss-Legendre node iteration failed to converge");
    }
    legendre(x, p, dp, prec);
    BigFloat w = two / ((one - x * x) * dp * dp);
    half.emplace_back(x, w);
  }
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    rule.nodes.push_back(-it->first);
    rule.weights.push_back(it->second);
  }
  for (const auto& [x, w] : half) {
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  return rule;
}

const Rule& cached_rule(mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it == cache.end()) it = cache.emplace(prec, compute_rule(prec)).first;
  return it->second;
}

BigFloat panel(const Integrand& f, const BigFloat& a, const BigFloat& b, const Rule& rule,
               mpfr_prec_t prec) {
  const BigFloat half = (b - a) / BigFloat::of(2, prec);
  const BigFloat mid = (a + b) / BigFloat::of(2, prec);
  BigFloat acc = BigFloat::of(0, prec);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc = acc + rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

BigFloat adapt(const Integrand& f, const BigFloat& a, const BigFloat& b, const BigFloat& tol,
               const Rule& rule, mpfr_prec_t prec, int depth) {
  const BigFloat whole = panel(f, a, b, rule, prec);
  const BigFloat mid = (a + b) / BigFloat::of(2, prec);
  const BigFloat left = panel(f, a, mid, rule, prec);
  const BigFloat right = panel(f, mid, b, rule, prec);
  if ((left + right - whole).abs() <= tol) return left + right;
  if (depth <= 0) throw numeric_error("adaptive quadrature exhausted its subdivision budget");
  const BigFloat htol = tol / BigFloat::of(2, prec);
  return adapt(f, a, mid, htol, rule, prec, depth - 1) +
         adapt(f, mid, b, htol, rule, prec, depth - 1);
}

}  // namespace

BigFloat integrate(const Integrand& f, const BigFloat& a, const BigFloat& b,
                   mpfr_prec_t precision, const BigFloat& abs_tol) {
  if (abs_tol.sign() <= 0) throw std::invalid_argument("quadrature tolerance must be positive");
  const mpfr_prec_t work = precision + kGuardBits;
  if (a == b) return BigFloat::of(0, precision);
  const Rule& rule = cached_rule(work);
  BigFloat value = adapt(f, a.to_precision(work), b.to_precision(work), abs_tol.to_precision(work),
                         rule, work, kMaxDepth);
  return value.to_precision(precision);
}

BigFloat integrate_with_breaks(const Integrand& f, const BigFloat& a, const BigFloat& b,
                               const std::vector<BigFloat>& breaks, mpfr_prec_t precision,
                               const BigFloat& abs_tol) {
  std::vector<BigFloat> cuts;
  cuts.push_back(a);
  for (const auto& c : breaks) {
    if (a < c && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  const mpfr_prec_t work = precision + kGuardBits;
  BigFloat tol_each = abs_tol / BigFloat::of(static_cast<long>(cuts.size()), work);
  BigFloat acc = BigFloat::of(0, work);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    acc = acc + integrate(f, cuts[i], cuts[i + 1], work, tol_each);
  }
  return acc.to_precision(precision);
}

}  // namespace renvol
