#include <benchmark/benchmark.h>

#include <vector>

#include "renvol/expansion.hpp"
#include "renvol/fit.hpp"
#include "renvol/localization.hpp"
#include "renvol/profile.hpp"

using namespace renvol;

static void BM_potential(benchmark::State& state) {
  const mpfr_prec_t prec = state.range(0);
  const Profile p = build_profile(2, Rational{1, 3});
  const BigFloat tau = BigFloat::of(3, prec);
  for (auto _ : state) {
    BigFloat f = potential_F(p, tau, prec);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_potential)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_tau_solver(benchmark::State& state) {
  const mpfr_prec_t prec = state.range(0);
  const Profile p = build_profile(2, Rational{1, 3});
  const BigFloat eps = BigFloat::parse("1e-4", prec);
  for (auto _ : state) {
    BigFloat tau = tau_of_eps(p, eps, prec);
    benchmark::DoNotOptimize(tau);
  }
}
BENCHMARK(BM_tau_solver)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_volume_sample(benchmark::State& state) {
  const ModelParams m{1, Rational{1, 2}, Rational{1}};
  const Profile p = build_profile(m.n, m.beta);
  const BigFloat eps = BigFloat::parse("1e-5", 256);
  for (auto _ : state) {
    BigFloat v = vol_of_eps_numeric(m, p, eps, 256);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_volume_sample)->Unit(benchmark::kMillisecond);

static void BM_fit_pipeline(benchmark::State& state) {
  const ModelParams m{1, Rational{1, 2}, Rational{1}};
  const Profile p = build_profile(m.n, m.beta);
  std::vector<FitSample> samples;
  for (const auto& eps : default_eps_grid(256)) {
    samples.push_back({eps, vol_of_eps_numeric(m, p, eps, 256)});
  }
  for (auto _ : state) {
    FitResult fit = fit_expansion(samples, m.n, 256);
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_fit_pipeline)->Unit(benchmark::kMillisecond);

static void BM_localized_integral(benchmark::State& state) {
  const ModelParams m{2, Rational{1, 3}, Rational{1}};
  const Cutoff c = build_cutoff(Rational{-2}, Rational{-1}, 3);
  for (auto _ : state) {
    BigFloat v = localized_integral(m, c, 256);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_localized_integral)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
