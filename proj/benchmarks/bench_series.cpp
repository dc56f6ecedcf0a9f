#include <benchmark/benchmark.h>

#include <vector>

#include "renvol/profile.hpp"
#include "renvol/series.hpp"

using namespace renvol;

namespace {

TruncatedSeries gauge_eps(unsigned k_terms) {
  const Profile p = build_profile(2, Rational{1, 2});
  const auto tail = asymptotic_tail(p, k_terms);
  std::vector<Rational> neg;
  neg.reserve(tail.size());
  for (const auto& a : tail) neg.push_back(-a);
  const TruncatedSeries s{1, neg, static_cast<int>(k_terms) + 1};
  return exp(s).shifted(1);
}

}  // namespace

static void BM_revert(benchmark::State& state) {
  const TruncatedSeries eps = gauge_eps(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    TruncatedSeries u = revert(eps);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_revert)->Arg(8)->Arg(16)->Arg(32);

static void BM_laurent_power(benchmark::State& state) {
  const TruncatedSeries u = revert(gauge_eps(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) {
    TruncatedSeries t = u.pow(-3);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_laurent_power)->Arg(8)->Arg(16)->Arg(32);

static void BM_exp(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const Profile p = build_profile(3, Rational{-2, 3});
  const auto tail = asymptotic_tail(p, k);
  std::vector<Rational> neg;
  for (const auto& a : tail) neg.push_back(-a);
  const TruncatedSeries s{1, neg, static_cast<int>(k) + 1};
  for (auto _ : state) {
    TruncatedSeries e = exp(s);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_exp)->Arg(8)->Arg(16)->Arg(32);

static void BM_mul(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<Rational> ca, cb;
  for (int i = 0; i < k; ++i) {
    ca.emplace_back(2 * i + 1, i + 3);
    cb.emplace_back(-(i + 2), 2 * i + 5);
  }
  const TruncatedSeries a{0, ca, k};
  const TruncatedSeries b{0, cb, k};
  for (auto _ : state) {
    TruncatedSeries c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_mul)->Arg(16)->Arg(64)->Arg(256);

static void BM_constant_term_reversion(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const Profile p = build_profile(m - 1, Rational{1, 3});
  const auto tail = asymptotic_tail(p, m + 3);
  for (auto _ : state) {
    Rational c = constant_term_reversion(tail, m);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_constant_term_reversion)->Arg(2)->Arg(5)->Arg(9);

BENCHMARK_MAIN();
