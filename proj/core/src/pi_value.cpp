#include "renvol/pi_value.hpp"

#include <stdexcept>

#include "renvol/big_float.hpp"

namespace renvol {

PiValue PiValue::operator+(const PiValue& rhs) const {
  if (pi_power_ != rhs.pi_power_) {
    throw std::invalid_argument("PiValue: addition across pi powers (" +
                                std::to_string(pi_power_) + " vs " +
                                std::to_string(rhs.pi_power_) + ")");
  }
  return {coeff_ + rhs.coeff_, pi_power_};
}

PiValue PiValue::operator-(const PiValue& rhs) const { return *this + (-rhs); }

std::string PiValue::str() const {
  if (coeff_.is_zero()) return "0";
  if (pi_power_ == 0) return coeff_.str();
  std::string out = "(" + coeff_.str() + ")·π";
  if (pi_power_ > 1) out += "^" + std::to_string(pi_power_);
  return out;
}

BigFloat PiValue::to_bigfloat(long precision) const {
  const BigFloat c = BigFloat::of(coeff_, precision);
  if (pi_power_ == 0) return c;
  return c * BigFloat::pi(precision).pow_si(static_cast<long>(pi_power_));
}

}  // namespace renvol
