#pragma once

#include <string>

#include "renvol/rational.hpp"

namespace renvol {

class BigFloat;

/// Homogeneous exact monomial coeff * pi^k. Keeping pi symbolic makes every
/// identity check in the exact path a zero-tolerance rational equality;
/// numbers only become floating point at the output boundary.
class PiValue {
 public:
  PiValue(Rational coeff, unsigned pi_power) : coeff_(std::move(coeff)), pi_power_(pi_power) {}

  const Rational& coeff() const { return coeff_; }
  unsigned pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_.is_zero(); }

  /// Mixed pi powers have no exact sum; addition between them throws.
  PiValue operator+(const PiValue& rhs) const;
  PiValue operator-(const PiValue& rhs) const;
  PiValue operator-() const { return {-coeff_, pi_power_}; }
  PiValue operator*(const PiValue& rhs) const { return {coeff_ * rhs.coeff_, pi_power_ + rhs.pi_power_}; }
  PiValue operator*(const Rational& rhs) const { return {coeff_ * rhs, pi_power_}; }

  friend bool operator==(const PiValue& a, const PiValue& b) {
    return a.pi_power_ == b.pi_power_ && a.coeff_ == b.coeff_;
  }

  /// "(p/q)·π^k"; "0" when zero, bare "p/q" when k == 0.
  std::string str() const;

  /// coeff * pi^k at the requested binary precision.
  BigFloat to_bigfloat(long precision) const;

 private:
  Rational coeff_;
  unsigned pi_power_;
};

}  // namespace renvol
