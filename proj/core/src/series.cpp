#include "renvol/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace renvol {

namespace {

const Rational& rational_zero() {
  static const Rational z{0};
  return z;
}

// Coefficient lookup that never throws: exponents outside the window are
// zero. Callers must keep exponent < trunc themselves.
const Rational& window_coeff(const TruncatedSeries& s, int e) {
  if (e < s.lead_exponent() || s.known_zero()) return rational_zero();
  return s.coeff(e);
}

}  // namespace

TruncatedSeries::TruncatedSeries(int lead, std::vector<Rational> coeffs, int trunc)
    : lead_(lead), coeffs_(std::move(coeffs)), trunc_(trunc) {
  if (trunc_ < lead_ + static_cast<int>(coeffs_.size())) {
    throw std::invalid_argument("series truncation order inside the coefficient window");
  }
  normalize();
}

void TruncatedSeries::normalize() {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == Rational{0}) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<int>(skip);
  }
  while (!coeffs_.empty() && coeffs_.back() == Rational{0}) coeffs_.pop_back();
  if (coeffs_.empty()) lead_ = trunc_;
}

TruncatedSeries TruncatedSeries::zero(int trunc) { return {trunc, {}, trunc}; }

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int exponent, int trunc) {
  if (exponent >= trunc) throw std::invalid_argument("monomial exponent beyond truncation order");
  return {exponent, {c}, trunc};
}

TruncatedSeries TruncatedSeries::identity(int trunc) {
  return monomial(Rational{1}, 1, trunc);
}

const Rational& TruncatedSeries::coeff(int exponent) const {
  if (exponent >= trunc_) throw std::out_of_range("series coefficient beyond truncation order");
  const long idx = static_cast<long>(exponent) - lead_;
  // below the window or in a trimmed-zero gap above it: exact zero
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return rational_zero();
  return coeffs_[static_cast<std::size_t>(idx)];
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(Rational{0} - c);
  return {lead_, std::move(out), trunc_};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int trunc = std::min(a.trunc_, b.trunc_);
  const int lead = std::min({a.lead_, b.lead_, trunc});
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(std::max(0, trunc - lead)));
  for (int e = lead; e < trunc; ++e) out.push_back(window_coeff(a, e) + window_coeff(b, e));
  return {lead, std::move(out), trunc};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int trunc = std::min(a.trunc_ + b.lead_, b.trunc_ + a.lead_);
  const int lead = a.lead_ + b.lead_;
  if (a.known_zero() || b.known_zero() || lead >= trunc) return TruncatedSeries::zero(trunc);
  std::vector<Rational> out(static_cast<std::size_t>(trunc - lead), Rational{0});
  const int na = static_cast<int>(a.coeffs_.size());
  for (int i = 0; i < na; ++i) {
    const int ea = a.lead_ + i;
    const int nb = static_cast<int>(b.coeffs_.size());
    for (int j = 0; j < nb; ++j) {
      const int e = ea + b.lead_ + j;
      if (e >= trunc) break;
      out[static_cast<std::size_t>(e - lead)] +=
          a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {lead, std::move(out), trunc};
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b.inverse();
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_) out.push_back(x * c);
  return {lead_, std::move(out), trunc_};
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.trunc_ == b.trunc_ && a.lead_ == b.lead_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::shifted(int shift) const {
  return {lead_ + shift, coeffs_, trunc_ + shift};
}

TruncatedSeries TruncatedSeries::truncated(int new_trunc) const {
  if (new_trunc > trunc_) throw std::invalid_argument("cannot extend a truncated series");
  std::vector<Rational> out;
  for (int e = lead_; e < std::min(new_trunc, lead_ + static_cast<int>(coeffs_.size())); ++e) {
    out.push_back(coeffs_[static_cast<std::size_t>(e - lead_)]);
  }
  return {std::min(lead_, new_trunc), std::move(out), new_trunc};
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (known_zero()) {
    throw std::domain_error("series inverse: zero leading coefficient in the known window");
  }
  const Rational& c0 = coeffs_.front();
  const int len = trunc_ - lead_;  // > 0 for a nonempty window
  // f = c0 x^lead (1 + h); invert the unit part by the standard recurrence.
  std::vector<Rational> w(static_cast<std::size_t>(len), Rational{0});
  w[0] = Rational{1};
  for (int m = 1; m < len; ++m) {
    Rational acc{0};
    for (int j = 1; j <= m && j < static_cast<int>(coeffs_.size()); ++j) {
      acc += (coeffs_[static_cast<std::size_t>(j)] / c0) * w[static_cast<std::size_t>(m - j)];
    }
    w[static_cast<std::size_t>(m)] = Rational{0} - acc;
  }
  for (auto& x : w) x = x / c0;
  return {-lead_, std::move(w), len - lead_};
}

TruncatedSeries TruncatedSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return monomial(Rational{1}, 0, std::max(1, trunc_ - lead_));
  TruncatedSeries acc = *this;
  for (long i = 1; i < k; ++i) acc = acc * (*this);
  return acc;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e = lead_; e < lead_ + static_cast<int>(coeffs_.size()); ++e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e - lead_)];
    if (c == Rational{0}) continue;
    if (!first) os << " + ";
    os << "(" << c.str() << ")*x^" << e;
    first = false;
  }
  if (first) os << "0";
  os << " + O(x^" << trunc_ << ")";
  return os.str();
}

TruncatedSeries exp(const TruncatedSeries& a) {
  if (a.known_zero()) {
    if (a.trunc_order() < 1) throw std::domain_error("series exp: unknown constant term");
    return TruncatedSeries::monomial(Rational{1}, 0, a.trunc_order());
  }
  if (a.lead_exponent() < 1) throw std::domain_error("series exp: nonzero constant term");
  const int trunc = a.trunc_order();
  // E' = a'·E gives m·E_m = Σ_{k=1..m} k·a_k·E_{m−k}.
  std::vector<Rational> e(static_cast<std::size_t>(trunc), Rational{0});
  e[0] = Rational{1};
  for (int m = 1; m < trunc; ++m) {
    Rational acc{0};
    for (int k = 1; k <= m; ++k) {
      const Rational& ak = window_coeff(a, k);
      if (ak == Rational{0}) continue;
      acc += ak * Rational{k} * e[static_cast<std::size_t>(m - k)];
    }
    e[static_cast<std::size_t>(m)] = acc / Rational{m};
  }
  return {0, std::move(e), trunc};
}

TruncatedSeries log(const TruncatedSeries& a) {
  if (a.lead_exponent() != 0 || !(a.coeff(0) == Rational{1})) {
    throw std::domain_error("series log: constant term must be exactly 1");
  }
  const int trunc = a.trunc_order();
  // a·L' = a' with a_0 = 1 gives L_m = a_m − (1/m)·Σ_{j=1..m−1} a_j·(m−j)·L_{m−j}.
  std::vector<Rational> l(static_cast<std::size_t>(trunc), Rational{0});
  for (int m = 1; m < trunc; ++m) {
    Rational acc{0};
    for (int j = 1; j < m; ++j) {
      const Rational& aj = window_coeff(a, j);
      if (aj == Rational{0}) continue;
      acc += aj * Rational{m - j} * l[static_cast<std::size_t>(m - j)];
    }
    l[static_cast<std::size_t>(m)] = window_coeff(a, m) - acc / Rational{m};
  }
  return {0, std::move(l), trunc};
}

TruncatedSeries revert(const TruncatedSeries& a) {
  if (a.known_zero() || a.lead_exponent() != 1) {
    throw std::domain_error("series reversion: need zero constant and nonzero linear coefficient");
  }
  const int trunc = a.trunc_order();
  if (trunc < 2) throw std::domain_error("series reversion: truncation order below 2");
  const Rational c1 = a.coeff(1);
  // Fixed-point substitution g ← (x − Σ_{k≥2} a_k g^k)/c1, each pass raising
  // the agreement order by one; g0 = x/c1 is already correct through x^1.
  TruncatedSeries g = TruncatedSeries::monomial(Rational{1} / c1, 1, trunc);
  const TruncatedSeries x = TruncatedSeries::identity(trunc);
  for (int pass = 0; pass < trunc; ++pass) {
    TruncatedSeries acc = TruncatedSeries::zero(trunc);
    TruncatedSeries gp = (g * g).truncated(trunc);
    for (int k = 2; k < trunc; ++k) {
      const Rational& ak = a.coeff(k);
      if (!(ak == Rational{0})) acc = acc + gp * ak;
      if (k + 1 < trunc) gp = (gp * g).truncated(trunc);
    }
    TruncatedSeries next = (x - acc) * (Rational{1} / c1);
    if (next == g) return g;
    g = std::move(next);
  }
  throw std::runtime_error("series reversion failed to stabilize");
}

TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.known_zero() || b.lead_exponent() < 1) {
    throw std::domain_error("series composition: inner series needs lead exponent >= 1");
  }
  const int lb = b.lead_exponent();
  // Unknown tail of a contributes O(b^{trunc_a}) = O(x^{trunc_a·lb}).
  int trunc = a.trunc_order() * lb;
  TruncatedSeries acc = TruncatedSeries::zero(trunc);
  for (int e = a.lead_exponent(); e < a.trunc_order(); ++e) {
    const Rational& c = a.coeff(e);
    if (c == Rational{0}) continue;
    if (e == 0) {
      acc = acc + TruncatedSeries::monomial(c, 0, trunc);
    } else {
      acc = acc + b.pow(e) * c;
    }
  }
  return acc.trunc_order() > trunc ? acc.truncated(trunc) : acc;
}

bool agree_through(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
  if (order > a.trunc_order() || order > b.trunc_order()) {
    throw std::out_of_range("agreement order beyond a truncation order");
  }
  int from = std::min({a.lead_exponent(), b.lead_exponent(), order});
  for (int e = from; e < order; ++e) {
    if (!(window_coeff(a, e) == window_coeff(b, e))) return false;
  }
  return true;
}

Rational constant_term_reversion(std::span<const Rational> tail, unsigned m) {
  const unsigned k_terms = static_cast<unsigned>(tail.size());
  if (k_terms < m + 1) {
    throw std::invalid_argument("constant_term_reversion needs at least m+1 tail coefficients");
  }
  const int trunc = static_cast<int>(k_terms) + 1;
  // s(u) = −Σ a_k u^k, known through u^K.
  std::vector<Rational> neg;
  neg.reserve(tail.size());
  for (const auto& ak : tail) neg.push_back(Rational{0} - ak);
  TruncatedSeries s{1, std::move(neg), trunc};
  TruncatedSeries eps = exp(s).shifted(1);  // ε(u) = u·exp(s), O(u^{K+2})
  TruncatedSeries u_of_eps = revert(eps);
  TruncatedSeries tau_pow = u_of_eps.pow(-static_cast<long>(m));  // τ^m = u^{−m}
  return tau_pow.coeff(0);
}

Rational constant_term_residue(const Rational& a_m, unsigned m) {
  return Rational{0} - Rational{static_cast<long>(m)} * a_m;
}

}  // namespace renvol
