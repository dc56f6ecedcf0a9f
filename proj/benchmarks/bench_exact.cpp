#include <benchmark/benchmark.h>

#include "renvol/exact_core.hpp"
#include "renvol/expansion.hpp"
#include "renvol/term_report.hpp"

using namespace renvol;

static void BM_formula(benchmark::State& state) {
  const ModelParams p{static_cast<unsigned>(state.range(0)), Rational{1, 3}, Rational{7}};
  for (auto _ : state) {
    PiValue v = eval_renvol_formula(p);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_formula)->Arg(1)->Arg(4)->Arg(8);

static void BM_decomposition_lattice(benchmark::State& state) {
  // the full acceptance lattice: 9 dimensions x 7 betas x 3 volumes
  const Rational betas[] = {Rational{-3}, Rational{-1}, Rational{-1, 2}, Rational{0},
                            Rational{1, 3}, Rational{1, 2}, Rational{9, 10}};
  for (auto _ : state) {
    bool all_zero = true;
    for (unsigned n = 0; n <= 8; ++n) {
      for (const auto& beta : betas) {
        for (long volL : {1L, 2L, 7L}) {
          all_zero = all_zero && check_decomposition({n, beta, Rational{volL}}).is_zero();
        }
      }
    }
    benchmark::DoNotOptimize(all_zero);
  }
}
BENCHMARK(BM_decomposition_lattice);

static void BM_expansion_exact(benchmark::State& state) {
  const ModelParams p{static_cast<unsigned>(state.range(0)), Rational{1, 2}, Rational{1}};
  for (auto _ : state) {
    Expansion e = expansion_exact(p, 3);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_expansion_exact)->Arg(0)->Arg(2)->Arg(6);

static void BM_term_report(benchmark::State& state) {
  const ModelParams p{4, Rational{1, 2}, Rational{3}};
  for (auto _ : state) {
    TermReport r = compare_conventions(p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_term_report);

BENCHMARK_MAIN();
