#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "renvol/big_float.hpp"
#include "renvol/exact_core.hpp"

using namespace renvol;

namespace {

const std::vector<Rational>& beta_grid() {
  static const std::vector<Rational> g = {Rational{-3},   Rational{-1},   Rational{-1, 2},
                                          Rational{0},    Rational{1, 3}, Rational{1, 2},
                                          Rational{9, 10}};
  return g;
}

}  // namespace

TEST_CASE("pi-graded values") {
  const PiValue a{Rational{1, 3}, 2};
  const PiValue b{Rational{1, 6}, 2};
  CHECK((a + b).coeff() == Rational{1, 2});
  CHECK((a - b).coeff() == Rational{1, 6});
  CHECK((a * b) == PiValue{Rational{1, 18}, 4});
  CHECK((a * Rational{3}).coeff() == Rational{1});
  CHECK_THROWS_AS(a + PiValue(Rational{1}, 3), std::invalid_argument);
  CHECK(PiValue{Rational{1, 36}, 2}.str() == "(1/36)·π^2");
  CHECK(PiValue{Rational{0}, 5}.str() == "0");
  CHECK(PiValue{Rational{7, 2}, 0}.str() == "7/2");

  // numeric boundary: pi^2/36 to 40 digits
  const BigFloat v = PiValue{Rational{1, 36}, 2}.to_bigfloat(192);
  CHECK(v.str(40) == "2.741556778080377394120691944410041982032e-1");
}

TEST_CASE("model params") {
  CHECK_THROWS_AS(make_params(1, Rational{0}, Rational{0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(make_params(1, Rational{0}, Rational{-2}).validate(), std::invalid_argument);
  CHECK(make_params(1, Rational{1, 2}, Rational{1}).ke_exists());
  CHECK_FALSE(make_params(1, Rational{1}, Rational{1}).ke_exists());
  CHECK_FALSE(make_params(1, Rational{3, 2}, Rational{1}).ke_exists());
}

TEST_CASE("renormalized volume formula") {
  CHECK(eval_renvol_formula({1, Rational{1, 2}, Rational{2}}) == PiValue{Rational{1, 36}, 2});

  // n = 0 collapses to −π(1+β)·volL
  for (const auto& beta : beta_grid()) {
    const PiValue v = eval_renvol_formula({0, beta, Rational{1}});
    CHECK(v.pi_power() == 1);
    CHECK(v.coeff() == -(Rational{1} + beta));
  }

  CHECK(eval_renvol_formula({2, Rational{-1}, Rational{1}}) == PiValue{Rational{-77, 81}, 3});
  // volL scales linearly
  const PiValue one = eval_renvol_formula({3, Rational{1, 3}, Rational{1}});
  const PiValue seven = eval_renvol_formula({3, Rational{1, 3}, Rational{7}});
  CHECK(seven == one * Rational{7});
}

TEST_CASE("total Q-prime curvature") {
  CHECK(eval_total_qprime({1, Rational{1, 2}, Rational{1}}) == PiValue{Rational{1, 2}, 2});
  CHECK(eval_total_qprime({0, Rational{1, 4}, Rational{1}}) == PiValue{Rational{1}, 1});
  CHECK(eval_total_qprime({2, Rational{0}, Rational{5}}).is_zero());
  // odd powers keep the sign of beta
  CHECK(eval_total_qprime({0, Rational{-1}, Rational{1}}).coeff() < Rational{0});
}

TEST_CASE("Chern integrals") {
  CHECK(eval_chern_integral_tube({1, Rational{1, 2}, Rational{3}}) == Rational{-3, 4});
  CHECK(eval_chern_integral_tube({2, Rational{0}, Rational{1}}) == Rational{-1});
  CHECK(eval_chern_integral_tube({4, Rational{1}, Rational{9}}) == Rational{0});
  // negative for beta < 1 and any volL > 0
  for (const auto& beta : beta_grid()) {
    for (unsigned n = 0; n <= 5; ++n) {
      CHECK(eval_chern_integral_tube({n, beta, Rational{7}}) < Rational{0});
    }
  }
  CHECK(eval_chern_integral_general(2, Rational{1, 2}, Rational{3}) == Rational{-3, 8});
  CHECK(eval_chern_integral_general(1, Rational{-1}, Rational{5, 2}) == Rational{10});
}

TEST_CASE("decomposition residual is exactly zero") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (const auto& beta : beta_grid()) {
      for (long volL : {1L, 2L, 7L}) {
        const PiValue r = check_decomposition({n, beta, Rational{volL}});
        CHECK(r.is_zero());
      }
    }
  }
}

TEST_CASE("decomposition spot value, term by term") {
  // n=1, beta=1/2, volL=2: pi^2/4 − 2pi^2/9 = pi^2/36
  const ModelParams p{1, Rational{1, 2}, Rational{2}};
  const PiValue qp = eval_total_qprime(p);
  // (−1)^{n+1}/(2(n!)²(n+1)!) at n=1 is +1/4
  const PiValue qprime_term = qp * Rational{1, 4};
  CHECK(qprime_term == PiValue{Rational{1, 4}, 2});
  const PiValue chern_factor{Rational{4, 9}, 2};  // (2π/3)²
  const PiValue chern_term = chern_factor * eval_chern_integral_tube(p);
  CHECK(chern_term == PiValue{Rational{-2, 9}, 2});
  CHECK(qprime_term + chern_term == eval_renvol_formula(p));
}

TEST_CASE("decomposition detects a broken evaluator") {
  // shifting any one ingredient must surface as a nonzero residual
  const ModelParams p{2, Rational{1, 2}, Rational{1}};
  const PiValue v = eval_renvol_formula(p);
  const PiValue broken = v + PiValue{Rational{1, 1000}, v.pi_power()};
  CHECK_FALSE((broken - v).is_zero());
}
