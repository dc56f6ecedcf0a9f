#include "renvol/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace renvol {

Rational::Rational(long num, long den) : Rational() {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(q_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(q_);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("Rational: expected \"p\", \"-p\" or \"p/q\", got \"" +
                                std::string(text) + "\"");
  }
  Rational r;
  const std::string repr = std::string(num) + "/" + std::string(den);
  if (mpq_set_str(r.q_, repr.c_str(), 10) != 0) {
    throw std::invalid_argument("Rational: unparsable \"" + std::string(text) + "\"");
  }
  if (mpz_sgn(mpq_denref(r.q_)) == 0) {
    throw std::invalid_argument("Rational: zero denominator in \"" + std::string(text) + "\"");
  }
  mpq_canonicalize(r.q_);
  if (negative) mpq_neg(r.q_, r.q_);
  return r;
}

Rational Rational::factorial(unsigned long n) {
  Rational r;
  mpz_fac_ui(mpq_numref(r.q_), n);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  mpq_add(q_, q_, rhs.q_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  mpq_sub(q_, q_, rhs.q_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  mpq_mul(q_, q_, rhs.q_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::invalid_argument("Rational: division by zero");
  mpq_div(q_, q_, rhs.q_);
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent == 0) return Rational(1);
  const Rational base = exponent < 0 ? reciprocal() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), e);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), e);
  // powers of a canonical fraction stay canonical
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::numerator_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::denominator_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace renvol
