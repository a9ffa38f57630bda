// Compares the OpenMP candidate sweep against the serial reference on
// programs whose head signature grows, so the 2^n enumeration dominates.
// Run with --benchmark_filter=... to pick one family.

#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "pasp/asp.hpp"
#include "pasp/model.hpp"

namespace {

// n chained guesses x_i <- not y_i / y_i <- not x_i plus one constraint
// per pair; 2n head atoms, 2^n answer sets pruned down to one by the
// constraints. The sweep still visits every candidate.
pasp::Program guess_chain(int pairs) {
  pasp::Program p;
  for (int i = 0; i < pairs; ++i) {
    std::string x = "x" + std::to_string(i);
    std::string y = "y" + std::to_string(i);
    p.clauses.push_back({{x}, {}, {y}});
    p.clauses.push_back({{y}, {}, {x}});
    p.clauses.push_back({{}, {y}, {}});
  }
  return p;
}

// A single even loop of default negation over n atoms: two answer sets
// regardless of size, all cost in the enumeration.
pasp::Program even_cycle(int atoms) {
  pasp::Program p;
  for (int i = 0; i < atoms; ++i) {
    std::string head = "p" + std::to_string(i);
    std::string blocker = "p" + std::to_string((i + 1) % atoms);
    p.clauses.push_back({{head}, {}, {blocker}});
  }
  return p;
}

void run(benchmark::State& state, const pasp::Program& p, bool parallel) {
  pasp::AspOptions opt;
  opt.parallel = parallel;
  for (auto _ : state) {
    auto sets = parallel ? pasp::answer_sets(p, opt)
                         : pasp::answer_sets_serial(p, opt);
    benchmark::DoNotOptimize(sets);
  }
}

void BM_guess_chain_serial(benchmark::State& state) {
  run(state, guess_chain(static_cast<int>(state.range(0))), false);
}

void BM_guess_chain_parallel(benchmark::State& state) {
  run(state, guess_chain(static_cast<int>(state.range(0))), true);
}

void BM_even_cycle_serial(benchmark::State& state) {
  run(state, even_cycle(static_cast<int>(state.range(0))), false);
}

void BM_even_cycle_parallel(benchmark::State& state) {
  run(state, even_cycle(static_cast<int>(state.range(0))), true);
}

}  // namespace

BENCHMARK(BM_guess_chain_serial)->DenseRange(4, 10, 2);
BENCHMARK(BM_guess_chain_parallel)->DenseRange(4, 10, 2);
BENCHMARK(BM_even_cycle_serial)->DenseRange(12, 20, 4);
BENCHMARK(BM_even_cycle_parallel)->DenseRange(12, 20, 4);

BENCHMARK_MAIN();
