#include <doctest.h>

#include <random>
#include <stdexcept>

#include "renvol/errors.hpp"
#include "renvol/profile.hpp"
#include "renvol/series.hpp"

using namespace renvol;

namespace {
constexpr mpfr_prec_t kPrec = 256;
}

TEST_CASE("profile construction") {
  const Profile p = build_profile(1, Rational{1, 2});
  CHECK(p.tau0 == Rational{1, 6});
  CHECK(p.capC == Rational{-5, 432});

  const Profile disc = build_profile(0, Rational{0});
  CHECK(disc.tau0 == Rational{1, 2});
  CHECK(disc.capC == Rational{-1, 4});

  const Profile p2 = build_profile(2, Rational{0});
  CHECK(p2.tau0 == Rational{1, 4});
  CHECK(p2.capC == Rational{-1, 256});

  CHECK_THROWS_AS(build_profile(3, Rational{1}), no_complete_metric_error);
  CHECK_THROWS_AS(build_profile(3, Rational{7, 2}), no_complete_metric_error);
}

TEST_CASE("cap identities hold exactly for all beta < 1") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> num(-30, 0);
  std::uniform_int_distribution<long> den(1, 12);
  for (unsigned n = 0; n <= 12; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const Rational beta{num(rng), den(rng)};
      const Profile p = build_profile(n, beta);
      CHECK(profile_V(p, p.tau0) == Rational{0});
      // V'(tau0) = 1 via the ODE at tau0: V' = beta + (n+2)tau0 − nV/tau0
      const Rational vprime =
          p.beta + Rational{static_cast<long>(n) + 2} * p.tau0 -
          Rational{static_cast<long>(n)} * profile_V(p, p.tau0) / p.tau0;
      CHECK(vprime == Rational{1});
      // tau0^{n+1} is the base of the cap term
      CHECK(p.tau0.pow(static_cast<long>(n) + 1) ==
            ((Rational{1} - beta) / Rational{static_cast<long>(n) + 2})
                .pow(static_cast<long>(n) + 1));
    }
  }
}

TEST_CASE("ode residual vanishes identically; the cap condition flags tampering") {
  const Profile p = build_profile(1, Rational{1, 2});
  CHECK(profile_ode_residual(p, Rational{3}) == Rational{0});
  CHECK(profile_ode_residual(p, Rational{7, 5}) == Rational{0});
  CHECK(profile_ode_residual(build_profile(0, Rational{0}), Rational{7, 5}) == Rational{0});

  std::mt19937 rng(29);
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 7);
  for (unsigned n = 0; n <= 6; ++n) {
    const Profile q = build_profile(n, Rational{-2, 3});
    for (int trial = 0; trial < 6; ++trial) {
      CHECK(profile_ode_residual(q, Rational{num(rng), den(rng)}) == Rational{0});
    }
  }

  // capC multiplies the homogeneous solution tau^{-n}, so the ODE residual
  // cannot see it; the cap condition V(tau0) = 0 is the check that does
  Profile bad = build_profile(1, Rational{1, 2});
  bad.capC += Rational{1};
  CHECK(profile_ode_residual(bad, Rational{1}) == Rational{0});
  CHECK_FALSE(profile_V(bad, bad.tau0) == Rational{0});
  CHECK_THROWS_AS(profile_ode_residual(p, Rational{0}), std::invalid_argument);
}

TEST_CASE("positivity scan") {
  CHECK(positivity_scan(build_profile(1, Rational{1, 2}), 1000).positive);
  CHECK(positivity_scan(build_profile(0, Rational{0}), 300).positive);

  // all-positive-coefficient tampering must not false-alarm
  Profile benign = build_profile(2, Rational{0});
  benign.capC = Rational{1};
  CHECK(positivity_scan(benign, 300).positive);

  // V = tau² − 3tau + 2 has a genuine dip below zero above tau0 when the
  // cap is moved; fabricate a profile that fails and check the witness
  Profile failing = build_profile(0, Rational{-3});  // V = (tau−1)(tau−2), tau0 = 2
  failing.tau0 = Rational{1, 2};                     // scan now enters (1/2, 2)
  const PositivityScan scan = positivity_scan(failing, 300);
  CHECK_FALSE(scan.positive);
  REQUIRE(scan.witness.has_value());
  CHECK(profile_V(failing, *scan.witness) <= Rational{0});
}

TEST_CASE("asymptotic tail: closed form through k = n+1, capC enters at n+2") {
  for (unsigned n = 0; n <= 6; ++n) {
    const Rational beta{-1, 2};
    const Profile p = build_profile(n, beta);
    const auto tail = asymptotic_tail(p, n + 3);
    for (unsigned k = 1; k <= n + 1; ++k) {
      CHECK(tail[k - 1] == tail_closed_form(n, beta, k));
    }
    // a_{n+2} moves when capC moves
    Profile q = p;
    q.capC += Rational{1, 5};
    const auto tail_q = asymptotic_tail(q, n + 3);
    for (unsigned k = 1; k <= n + 1; ++k) CHECK(tail_q[k - 1] == tail[k - 1]);
    CHECK_FALSE(tail_q[n + 1] == tail[n + 1]);
  }
  CHECK_THROWS_AS(tail_closed_form(2, Rational{1, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(tail_closed_form(2, Rational{1, 2}, 0), std::invalid_argument);
}

TEST_CASE("frozen tail witness (n=1, beta=1/2)") {
  const auto tail = asymptotic_tail(build_profile(1, Rational{1, 2}), 4);
  CHECK(tail[0] == Rational{1, 4});
  CHECK(tail[1] == Rational{-1, 32});
  CHECK(tail[2] == Rational{7, 5184});
  CHECK(tail[3] == Rational{13, 27648});
}

TEST_CASE("potential against the n=0 closed form") {
  // F(tau) = (1/2)·log(tau² − 1/4) for n=0, beta=0
  const Profile p = build_profile(0, Rational{0});
  const BigFloat f1 = potential_F(p, BigFloat::of(1, kPrec), kPrec);
  const BigFloat expected =
      (BigFloat::of(1, kPrec) - BigFloat::of(1, kPrec) / BigFloat::of(4, kPrec)).log() /
      BigFloat::of(2, kPrec);
  CHECK((f1 - expected).abs() <= BigFloat::pow2(-240, kPrec));

  // frozen 45-digit witness
  CHECK(f1.str(40) == "-1.438410362258904637196095029969137157518e-1");

  // anchoring: F − log(tau) → 0; at tau = 10⁶ the gap is below 10⁻¹²
  const BigFloat tau = BigFloat::of(1000000, kPrec);
  const BigFloat gap = (potential_F(p, tau, kPrec) - tau.log()).abs();
  CHECK(gap <= BigFloat::parse("1e-12", kPrec));

  CHECK_THROWS_AS(potential_F(p, BigFloat::of(0, kPrec), kPrec), std::invalid_argument);
  CHECK_THROWS_AS(potential_F(p, BigFloat::of(1, kPrec), 32), std::invalid_argument);
}

TEST_CASE("defining function decreases in tau") {
  const Profile p = build_profile(2, Rational{1, 3});
  const BigFloat e1 = eps_of_tau(p, BigFloat::of(1, kPrec), kPrec);
  const BigFloat e2 = eps_of_tau(p, BigFloat::of(3, kPrec), kPrec);
  const BigFloat e3 = eps_of_tau(p, BigFloat::of(9, kPrec), kPrec);
  CHECK(e2 < e1);
  CHECK(e3 < e2);
}

TEST_CASE("level-set solver against the n=0 closed form") {
  // eps = (tau² − 1/4)^{−1/2}, so tau(1/10) = sqrt(100 + 1/4)
  const Profile p = build_profile(0, Rational{0});
  const BigFloat tau = tau_of_eps(p, BigFloat::parse("0.1", kPrec), kPrec);
  const BigFloat expected = (BigFloat::of(401, kPrec) / BigFloat::of(4, kPrec)).sqrt();
  CHECK((tau - expected).abs() <= expected * BigFloat::pow2(-240, kPrec));
  CHECK(tau.str(40) == "1.001249219725039286384860607416130271074e1");

  // tau_eps · eps → 1 as eps shrinks
  const BigFloat eps = BigFloat::parse("1e-8", kPrec);
  const BigFloat product = tau_of_eps(p, eps, kPrec) * eps;
  CHECK((product - BigFloat::of(1, kPrec)).abs() <= BigFloat::parse("1e-15", kPrec));
}

TEST_CASE("level-set solver round trip and monotonicity") {
  for (unsigned n : {0u, 1u, 3u}) {
    const Profile p = build_profile(n, Rational{-2, 3});
    BigFloat last = BigFloat::of(0, kPrec);
    for (const char* eps_str : {"1e-2", "1e-4", "1e-6"}) {
      const BigFloat eps = BigFloat::parse(eps_str, kPrec);
      const BigFloat tau = tau_of_eps(p, eps, kPrec);
      CHECK(tau > last);  // smaller eps, larger tau
      last = tau;
      const BigFloat back = eps_of_tau(p, tau, kPrec);
      CHECK((back - eps).abs() <= eps * BigFloat::pow2(-200, kPrec));
    }
  }
  CHECK_THROWS_AS(tau_of_eps(build_profile(0, Rational{0}), BigFloat::of(-1, kPrec), kPrec),
                  std::invalid_argument);
}
