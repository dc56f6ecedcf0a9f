#pragma once

#include <span>
#include <string>
#include <vector>

#include "renvol/rational.hpp"

namespace renvol {

/// Truncated formal Laurent series with exact Rational coefficients:
///
///   f = sum_{e = lead}^{trunc-1} c_e x^e  +  O(x^trunc)
///
/// Truncation propagation is pessimistic and explicit: every operation
/// carries the tightest order it can certify, and an operation that would
/// need coefficients at or beyond trunc_order throws instead of padding
/// with zeros. Coefficients below the known window are exact zeros.
class TruncatedSeries {
 public:
  /// coeffs[i] is the coefficient of x^{lead+i}. Leading zero coefficients
  /// are trimmed after construction and after every operation, so
  /// lead_exponent() always points at a nonzero coefficient; a series whose
  /// known window is entirely zero is the canonical zero-to-O(x^trunc)
  /// series with lead_exponent() == trunc_order().
  TruncatedSeries(int lead, std::vector<Rational> coeffs, int trunc);

  static TruncatedSeries zero(int trunc);
  static TruncatedSeries monomial(const Rational& c, int exponent, int trunc);
  /// x + O(x^trunc), the identity for composition.
  static TruncatedSeries identity(int trunc);

  int lead_exponent() const { return lead_; }
  int trunc_order() const { return trunc_; }
  bool known_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^exponent. Exponents below the window are exact zeros;
  /// exponents >= trunc_order are unknown and throw std::out_of_range.
  const Rational& coeff(int exponent) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator*(const Rational& c) const;

  /// Exact equality of truncation order and every known coefficient.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Multiply by x^shift (exact relabeling).
  TruncatedSeries shifted(int shift) const;
  /// Forget coefficients at or beyond new_trunc (must not exceed trunc_order).
  TruncatedSeries truncated(int new_trunc) const;

  /// 1/f for f with a nonzero leading coefficient in the known window.
  TruncatedSeries inverse() const;
  /// f^k for any integer k (negative k through inverse()).
  TruncatedSeries pow(long k) const;

  std::string str() const;

 private:
  int lead_;
  std::vector<Rational> coeffs_;
  int trunc_;

  void normalize();
};

/// Formal exponential. Requires zero constant term and lead_exponent >= 1.
TruncatedSeries exp(const TruncatedSeries& a);
/// Formal logarithm. Requires constant term exactly 1.
TruncatedSeries log(const TruncatedSeries& a);

/// Compositional inverse g of a, so a(g(x)) = x = g(a(x)) to truncation
/// order. Requires zero constant term and nonzero linear coefficient; a
/// non-unit linear coefficient is normalized internally. Implemented by
/// order-raising fixed-point substitution.
TruncatedSeries revert(const TruncatedSeries& a);

/// a(b(x)) for inner series b with lead_exponent >= 1; Laurent outer series
/// use b's inverse for the negative powers.
TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b);

/// True when a and b have identical coefficients for every exponent below
/// `order` (which must not exceed either truncation order).
bool agree_through(const TruncatedSeries& a, const TruncatedSeries& b, int order);

/// The ε⁰ coefficient of τ^m where ε = u·exp(−Σ_{k=1..K} a_k u^k), τ = 1/u:
/// build ε(u), revert to u(ε), raise to the −m and read the constant term.
/// Requires K >= m + 1.
Rational constant_term_reversion(std::span<const Rational> tail, unsigned m);

/// Residue shortcut for the same quantity: −m·a_m.
Rational constant_term_residue(const Rational& a_m, unsigned m);

}  // namespace renvol
