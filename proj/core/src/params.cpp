#include "renvol/params.hpp"

#include <stdexcept>

namespace renvol {

void ModelParams::validate() const {
  if (volL.sign() <= 0) {
    throw std::invalid_argument("ModelParams: volL must be positive, got " + volL.str());
  }
}

ModelParams make_params(unsigned n, Rational beta, Rational volL) {
  ModelParams p{n, std::move(beta), std::move(volL)};
  p.validate();
  return p;
}

}  // namespace renvol
