#pragma once

#include "renvol/rational.hpp"

namespace renvol {

/// The reduced model data of a tube over a polarized Kahler-Einstein base:
/// complex dimension n of the base, Einstein constant beta, and the
/// polarization volume Vol(L) > 0.
struct ModelParams {
  unsigned n = 0;
  Rational beta;
  Rational volL{1};

  /// A complete Kahler-Einstein metric on the tube exists iff beta < 1.
  /// The closed formulas stay algebraically valid for beta >= 1; callers
  /// surface this flag as a warning rather than refusing to evaluate.
  bool ke_exists() const { return beta < Rational(1); }

  /// Throws std::invalid_argument unless volL > 0.
  void validate() const;
};

ModelParams make_params(unsigned n, Rational beta, Rational volL);

}  // namespace renvol
