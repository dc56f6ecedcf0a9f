#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace renvol {

/// Exact arbitrary-precision fraction. Always canonical: lowest terms,
/// denominator > 0. All arithmetic is exact; there is no rounding anywhere
/// on this type.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long value) : Rational() { mpq_set_si(q_, value, 1); }
  Rational(long num, long den);

  Rational(const Rational& other) : Rational() { mpq_set(q_, other.q_); }
  Rational(Rational&& other) noexcept : Rational() { mpq_swap(q_, other.q_); }
  Rational& operator=(const Rational& other) {
    if (this != &other) mpq_set(q_, other.q_);
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "p", "-p", "p/q", "-p/q" (decimal digits only). Rejects anything
  /// else, including decimal points and exponents, with std::invalid_argument.
  static Rational from_string(std::string_view text);

  /// n! as an exact Rational.
  static Rational factorial(unsigned long n);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sign() const { return mpq_sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws on rhs == 0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_, b.q_);
    return c <=> 0;
  }

  /// Integer power; negative exponents invert (throws on 0^-k).
  Rational pow(long exponent) const;
  Rational abs() const;
  Rational reciprocal() const;  // throws on 0

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  /// Nearest double; for display and rough scale checks only.
  double to_double() const { return mpq_get_d(q_); }

  /// Underlying GMP value (used by BigFloat conversion).
  const __mpq_struct* raw() const { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace renvol
