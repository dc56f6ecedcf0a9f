#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "renvol/rational.hpp"

namespace renvol {

/// Arbitrary-precision binary float (MPFR-backed). Precision is explicit at
/// construction and carried by the value; binary operations round to the
/// wider operand's precision. There is no hidden default precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision) { mpfr_init2(x_, precision); }

  BigFloat(const BigFloat& other) {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_swap(x_, other.x_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(x_, mpfr_get_prec(other.x_));
      mpfr_set(x_, other.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(x_, other.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  static BigFloat of(long value, mpfr_prec_t precision);
  static BigFloat of(const Rational& value, mpfr_prec_t precision);
  /// Parses decimal/scientific notation ("1e-7", "0.25", ...).
  static BigFloat parse(std::string_view text, mpfr_prec_t precision);
  static BigFloat pi(mpfr_prec_t precision);
  /// 2^exponent, exact.
  static BigFloat pow2(long exponent, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  /// Same value rounded to a new precision.
  BigFloat to_precision(mpfr_prec_t precision) const;

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat log() const;
  BigFloat exp() const;
  BigFloat pow_si(long exponent) const;

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  /// Decimal string with the given number of significant digits.
  std::string str(size_t digits) const;

  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

 private:
  mpfr_t x_;
};

}  // namespace renvol
