#include <doctest.h>

#include <vector>

#include "renvol/exact_core.hpp"
#include "renvol/expansion.hpp"
#include "renvol/fit.hpp"
#include "renvol/profile.hpp"
#include "renvol/series.hpp"
#include "renvol/term_report.hpp"

using namespace renvol;

namespace {
constexpr mpfr_prec_t kPrec = 256;

const std::vector<Rational> kBetaGrid = {
    Rational{-3}, Rational{-1}, Rational{-1, 2}, Rational{0},
    Rational{1, 3}, Rational{1, 2}, Rational{9, 10}};
}  // namespace

TEST_CASE("exact expansion, disc bundle over a point") {
  const Expansion e = expansion_exact(make_params(0, Rational{0}, Rational{1}), 3);
  CHECK(e.scale == PiValue(Rational{2}, 1));
  CHECK(e.laurent.size() == 1);
  CHECK(e.laurent.at(-1) == Rational{1});
  CHECK(e.constant == Rational{-1, 2});
  REQUIRE(e.positive_tail.size() == 3);
  CHECK(e.positive_tail[0] == Rational{1, 8});
  CHECK(e.positive_tail[1] == Rational{0});
  CHECK(e.positive_tail[2] == Rational{-1, 128});
  CHECK(renormalized_volume_from_expansion(e) == PiValue(Rational{-1}, 1));
  // n = 0 is the one case where both conventions carry the same factorial,
  // so the expansion constant must reproduce the closed formula on the nose
  CHECK(renormalized_volume_from_expansion(e) ==
        eval_renvol_formula(make_params(0, Rational{0}, Rational{1})));
}

TEST_CASE("exact expansion, n = 0 with curvature") {
  const Expansion e = expansion_exact(make_params(0, Rational{1, 2}, Rational{1}), 3);
  CHECK(e.laurent.at(-1) == Rational{1});
  CHECK(e.constant == Rational{-3, 4});
  REQUIRE(e.positive_tail.size() == 3);
  CHECK(e.positive_tail[0] == Rational{3, 32});
  CHECK(e.positive_tail[1] == Rational{1, 32});
  CHECK(e.positive_tail[2] == Rational{15, 2048});
  CHECK(renormalized_volume_from_expansion(e) == PiValue(Rational{-3, 2}, 1));
}

TEST_CASE("exact expansion, n = 1") {
  const Expansion e = expansion_exact(make_params(1, Rational{1, 2}, Rational{1}), 3);
  CHECK(e.scale == PiValue(Rational{4}, 2));
  CHECK(e.laurent.at(-2) == Rational{1});
  CHECK(e.laurent.at(-1) == Rational{-1, 2});
  // boundary term (−β/(n+1))^{n+1} = 1/16, cap term tau0² = 1/36
  CHECK(e.constant == Rational{5, 144});
  REQUIRE(e.positive_tail.size() == 3);
  CHECK(e.positive_tail[0] == Rational{5, 648});
  CHECK(e.positive_tail[1] == Rational{5, 5184});
  CHECK(e.positive_tail[2] == Rational{1, 6912});
  CHECK(e.remainder_coeff == Rational{31, 3359232});
}

TEST_CASE("expansion constant equals boundary minus cap term for all parameters") {
  for (unsigned n = 0; n <= 8; ++n) {
    const long m = static_cast<long>(n) + 1;
    for (const auto& beta : kBetaGrid) {
      const ModelParams p = make_params(n, beta, Rational{3});
      const Expansion e = expansion_exact(p, 2);
      const Rational boundary = (-beta / Rational{m}).pow(m);
      const Rational cap = ((Rational{1} - beta) / Rational{m + 1}).pow(m);
      CHECK(e.constant == boundary - cap);
      // bridge to the closed formula: it divides the boundary term by (n+1)!
      const PiValue expected = e.scale * (boundary / Rational::factorial(n + 1) - cap);
      CHECK(eval_renvol_formula(p) == expected);
      // volL enters through the scale only
      const Expansion e7 = expansion_exact(make_params(n, beta, Rational{7}), 2);
      CHECK(e7.constant == e.constant);
      CHECK(e7.scale == PiValue(Rational{2}.pow(m) * Rational{7}, n + 1));
    }
  }
}

TEST_CASE("cap coefficient does not leak into the constant term") {
  // capC first enters the gauge tail at a_{n+2}; the ε⁰ coefficient of
  // τ_ε^{−(n+1)} stops at a_{n+1}, so tampering capC must leave it fixed
  for (unsigned n = 0; n <= 5; ++n) {
    const Rational beta{-1, 2};
    const Profile p = build_profile(n, beta);
    Profile tampered = p;
    tampered.capC += Rational{9, 7};
    const auto tail_a = asymptotic_tail(p, n + 3);
    const auto tail_b = asymptotic_tail(tampered, n + 3);
    CHECK_FALSE(tail_a[n + 1] == tail_b[n + 1]);
    const Rational c_a = constant_term_reversion(tail_a, n + 1);
    const Rational c_b = constant_term_reversion(tail_b, n + 1);
    CHECK(c_a == c_b);
    CHECK(c_a == (-beta / Rational{static_cast<long>(n) + 1}).pow(static_cast<long>(n) + 1));
  }
}

TEST_CASE("numeric volume against the n = 0 closed form") {
  const ModelParams p = make_params(0, Rational{0}, Rational{1});
  const Profile prof = build_profile(p.n, p.beta);
  const BigFloat vol = vol_of_eps_numeric(p, prof, BigFloat::parse("0.1", kPrec), kPrec);
  // Vol = 2π(τ_ε − τ₀) with τ_ε = sqrt(100 + 1/4)
  const BigFloat tau = (BigFloat::of(401, kPrec) / BigFloat::of(4, kPrec)).sqrt();
  const BigFloat expected =
      BigFloat::of(2, kPrec) * BigFloat::pi(kPrec) * (tau - BigFloat::parse("0.5", kPrec));
  CHECK((vol - expected).abs() <= expected * BigFloat::pow2(-240, kPrec));
  CHECK(vol.str(20) == "5.9768751208424129203e1");
}

TEST_CASE("numeric volume grows as the level shrinks") {
  const ModelParams p = make_params(2, Rational{-1}, Rational{1});
  const Profile prof = build_profile(p.n, p.beta);
  BigFloat last = BigFloat::of(0, kPrec);
  for (const char* s : {"1e-1", "1e-2", "1e-3"}) {
    const BigFloat v = vol_of_eps_numeric(p, prof, BigFloat::parse(s, kPrec), kPrec);
    CHECK(v > last);
    last = v;
  }
}

TEST_CASE("numeric volume matches the exact partial sum to the first omitted term") {
  const ModelParams p = make_params(1, Rational{1, 2}, Rational{1});
  const Profile prof = build_profile(p.n, p.beta);
  const Expansion e = expansion_exact(p, 3);
  REQUIRE_FALSE(e.remainder_coeff.is_zero());

  const BigFloat eps3 = BigFloat::parse("1e-3", kPrec);
  const BigFloat gap3 =
      (vol_of_eps_numeric(p, prof, eps3, kPrec) - expansion_eval(e, eps3, kPrec)).abs();
  const BigFloat hint3 = expansion_remainder_hint(e, eps3, kPrec);
  CHECK(gap3 <= hint3 * BigFloat::of(2, kPrec));
  CHECK(gap3 >= hint3 / BigFloat::of(2, kPrec));

  // the gap scales like ε^4 (order 3 kept): two decades in ε, eight in gap
  const BigFloat eps2 = BigFloat::parse("1e-2", kPrec);
  const BigFloat gap2 =
      (vol_of_eps_numeric(p, prof, eps2, kPrec) - expansion_eval(e, eps2, kPrec)).abs();
  const BigFloat ratio = gap2 / gap3;
  CHECK(ratio > BigFloat::parse("3e3", kPrec));
  CHECK(ratio < BigFloat::parse("3e4", kPrec));
}

namespace {
// synthetic volume samples that lie exactly in the fit basis span
std::vector<FitSample> synthetic_samples(const std::vector<int>& powers,
                                         const std::vector<long>& coeffs,
                                         const std::vector<int>& noise_sign, long noise_exp10) {
  std::vector<FitSample> samples;
  const auto grid = default_eps_grid(kPrec);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    BigFloat v = BigFloat::of(0, kPrec + 64);
    for (std::size_t j = 0; j < powers.size(); ++j) {
      v = v + BigFloat::of(coeffs[j], kPrec + 64) * grid[i].pow_si(powers[j]);
    }
    if (!noise_sign.empty()) {
      const BigFloat noise =
          BigFloat::parse("1e" + std::to_string(noise_exp10), kPrec + 64) *
          BigFloat::of(noise_sign[i % noise_sign.size()], kPrec + 64);
      v = v + noise;
    }
    samples.push_back({grid[i], v});
  }
  return samples;
}
}  // namespace

TEST_CASE("fit recovers exact coefficients from clean samples") {
  const std::vector<int> powers = {-2, -1, 0, 1};
  const std::vector<long> coeffs = {3, -2, 7, 5};
  const auto samples = synthetic_samples(powers, coeffs, {}, 0);
  const FitResult fit = fit_expansion(samples, 1, kPrec);
  for (std::size_t j = 0; j < powers.size(); ++j) {
    const BigFloat err =
        (fit.coefficient_of(powers[j]) - BigFloat::of(coeffs[j], kPrec)).abs();
    CHECK(err <= BigFloat::parse("1e-40", kPrec));
  }
  CHECK(fit.residual_norm <= BigFloat::parse("1e-30", kPrec));
  CHECK(fit.condition >= BigFloat::of(1, kPrec));
  CHECK_FALSE(fit.log_coefficient.has_value());
}

TEST_CASE("fit is stable under sample noise far below the tolerance") {
  const std::vector<int> powers = {-3, -2, -1, 0, 1};
  const std::vector<long> coeffs = {1, -1, 2, -3, 4};
  const auto clean = synthetic_samples(powers, coeffs, {}, 0);
  const auto noisy =
      synthetic_samples(powers, coeffs, {1, -1, 1, 1, -1, -1, 1, -1, -1, 1, 1, -1}, -20);
  const FitResult f0 = fit_expansion(clean, 2, kPrec);
  const FitResult f1 = fit_expansion(noisy, 2, kPrec);
  CHECK((f1.coefficient_of(0) - f0.coefficient_of(0)).abs() <= BigFloat::parse("1e-12", kPrec));
}

TEST_CASE("fit on the real volume recovers the renormalized volume, n = 0") {
  const ModelParams p = make_params(0, Rational{0}, Rational{1});
  const Profile prof = build_profile(p.n, p.beta);
  std::vector<FitSample> samples;
  for (const auto& eps : default_eps_grid(kPrec)) {
    samples.push_back({eps, vol_of_eps_numeric(p, prof, eps, kPrec)});
  }
  const FitResult fit = fit_expansion(samples, p.n, kPrec);
  const BigFloat target = -BigFloat::pi(kPrec);
  CHECK((fit.coefficient_of(0) - target).abs() <= target.abs() * BigFloat::parse("1e-8", kPrec));
}

TEST_CASE("no spurious logarithm in the volume expansion") {
  const ModelParams p = make_params(1, Rational{1, 2}, Rational{1});
  const Profile prof = build_profile(p.n, p.beta);
  std::vector<FitSample> samples;
  for (const auto& eps : default_eps_grid(kPrec)) {
    samples.push_back({eps, vol_of_eps_numeric(p, prof, eps, kPrec)});
  }
  const FitResult with_log = fit_expansion(samples, p.n, kPrec, true);
  REQUIRE(with_log.log_coefficient.has_value());
  CHECK(with_log.log_coefficient->abs() <= BigFloat::parse("1e-6", kPrec));

  // control: the detector must light up when a log really is present
  std::vector<FitSample> doped = samples;
  for (auto& s : doped) {
    s.vol = s.vol + BigFloat::parse("0.3", kPrec) * s.eps.log();
  }
  const FitResult doped_with = fit_expansion(doped, p.n, kPrec, true);
  const FitResult doped_without = fit_expansion(doped, p.n, kPrec, false);
  REQUIRE(doped_with.log_coefficient.has_value());
  CHECK((*doped_with.log_coefficient - BigFloat::parse("0.3", kPrec)).abs() <=
        BigFloat::parse("1e-5", kPrec));
  CHECK(doped_without.residual_norm >= doped_with.residual_norm * BigFloat::of(100, kPrec));
}

TEST_CASE("fitted constant is invariant under rescaling the defining function") {
  // ε → λ·ε rescales every Laurent coefficient except ε⁰
  const ModelParams p = make_params(1, Rational{-1}, Rational{1});
  const Profile prof = build_profile(p.n, p.beta);
  const BigFloat lambda = BigFloat::parse("2.5", kPrec);
  std::vector<FitSample> plain, scaled;
  for (const auto& eps : default_eps_grid(kPrec)) {
    const BigFloat v = vol_of_eps_numeric(p, prof, eps, kPrec);
    plain.push_back({eps, v});
    scaled.push_back({eps * lambda, v});
  }
  const FitResult f0 = fit_expansion(plain, p.n, kPrec);
  const FitResult f1 = fit_expansion(scaled, p.n, kPrec);
  const BigFloat c0 = f0.coefficient_of(0);
  CHECK((f1.coefficient_of(0) - c0).abs() <= c0.abs() * BigFloat::parse("1e-5", kPrec));
  // and the ε^{−2} coefficient picks up exactly λ²
  const BigFloat lead_ratio = f1.coefficient_of(-2) / f0.coefficient_of(-2);
  CHECK((lead_ratio - lambda * lambda).abs() <= BigFloat::parse("1e-5", kPrec));
}

TEST_CASE("term-by-term convention report") {
  const TermReport r0 = compare_conventions(make_params(0, Rational{1, 2}, Rational{1}));
  CHECK(r0.cap_ratio == Rational{1});
  REQUIRE(r0.boundary_ratio.has_value());
  CHECK(*r0.boundary_ratio == Rational{1});
  CHECK(r0.cap_computed == r0.cap_formula);
  CHECK(r0.boundary_computed == r0.boundary_formula);

  // β = 0 kills both sides of the boundary comparison; no ratio is reported
  const TermReport rz = compare_conventions(make_params(2, Rational{0}, Rational{1}));
  CHECK(rz.cap_ratio == Rational{1});
  CHECK_FALSE(rz.boundary_ratio.has_value());

  for (unsigned n = 1; n <= 6; ++n) {
    const TermReport ra = compare_conventions(make_params(n, Rational{1, 2}, Rational{1}));
    const TermReport rb = compare_conventions(make_params(n, Rational{-3}, Rational{7}));
    CHECK(ra.cap_ratio == Rational{1});
    CHECK(rb.cap_ratio == Rational{1});
    REQUIRE(ra.boundary_ratio.has_value());
    REQUIRE(rb.boundary_ratio.has_value());
    // the mismatch is the factorial of the convention, independent of β and volL
    CHECK(*ra.boundary_ratio == Rational::factorial(n + 1));
    CHECK(*rb.boundary_ratio == *ra.boundary_ratio);
  }
  CHECK(r0.volume_convention == "Vol = integral of omega^(n+1) without 1/(n+1)!");
}

TEST_CASE("expansion eval tracks the exact partial sum") {
  const Expansion e = expansion_exact(make_params(0, Rational{0}, Rational{1}), 3);
  const BigFloat eps = BigFloat::parse("0.25", kPrec);
  // 2π(1/ε − 1/2 + ε/8 − ε³/128)
  const BigFloat expected =
      BigFloat::of(2, kPrec) * BigFloat::pi(kPrec) *
      (BigFloat::of(4, kPrec) - BigFloat::parse("0.5", kPrec) +
       eps / BigFloat::of(8, kPrec) - eps.pow_si(3) / BigFloat::of(128, kPrec));
  CHECK((expansion_eval(e, eps, kPrec) - expected).abs() <= BigFloat::pow2(-240, kPrec));
}
