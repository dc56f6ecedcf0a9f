#include "renvol/big_float.hpp"

#include <algorithm>
#include <stdexcept>

namespace renvol {

namespace {

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat BigFloat::of(long value, mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_set_si(r.x_, value, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::of(const Rational& value, mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_set_q(r.x_, value.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t precision) {
  BigFloat r(precision);
  const std::string s(text);
  if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("BigFloat: unparsable \"" + s + "\"");
  }
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long exponent, mpfr_prec_t precision) {
  BigFloat r(precision);
  mpfr_set_si(r.x_, 1, MPFR_RNDN);
  mpfr_mul_2si(r.x_, r.x_, exponent, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::to_precision(mpfr_prec_t precision) const {
  BigFloat r(precision);
  mpfr_set(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  BigFloat r(precision());
  mpfr_log(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(precision());
  mpfr_exp(r.x_, x_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow_si(long exponent) const {
  BigFloat r(precision());
  mpfr_pow_si(r.x_, x_, exponent, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(size_t digits) const {
  if (!is_finite()) return mpfr_nan_p(x_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* s = mpfr_get_str(nullptr, &exp10, 10, digits, x_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  std::string sign_part;
  if (!mant.empty() && mant.front() == '-') {
    sign_part = "-";
    mant.erase(mant.begin());
  }
  // mant is the digit string with implied decimal point before it, value =
  // 0.mant * 10^exp10. Render as d.ddd...e<k>.
  std::string out = sign_part + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

}  // namespace renvol
