#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "anacon/cl_syntax.hpp"
#include "anacon/conflict_engine.hpp"
#include "anacon/contract_file.hpp"

namespace {

anacon::ContractDocument case_study() {
  std::ifstream in(ANACON_BENCH_FIXTURE);
  std::ostringstream ss;
  ss << in.rdbuf();
  return anacon::parse_contract_file(ss.str());
}

void BM_CaseStudyConflict(benchmark::State& state) {
  const auto doc = case_study();
  for (auto _ : state) {
    benchmark::DoNotOptimize(anacon::build_and_check(doc));
  }
}
BENCHMARK(BM_CaseStudyConflict)->Unit(benchmark::kMillisecond);

// Conflict-free chain over n actions: [1*][a_i](O(a_{i+1}) _ (O(r))). The
// whole reachable space is explored, and each state tries 2^n - 1 steps.
void BM_ExhaustiveExploration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<anacon::AtomicAction> alphabet;
  for (std::size_t i = 0; i < n; ++i) alphabet.emplace_back("a" + std::to_string(i));
  std::vector<anacon::Clause> clauses;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    clauses.push_back(anacon::parse_cl("[1*][a" + std::to_string(i) + "](O(a" +
                                       std::to_string(i + 1) + ") _ (O(a0)))"));
  }
  anacon::ExplorationLimits lim;
  lim.max_depth = 6;
  std::size_t states = 0;
  for (auto _ : state) {
    const auto r = anacon::analyze(clauses, alphabet, anacon::MutexRelation{}, lim);
    states = r.states;
    benchmark::DoNotOptimize(r);
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_ExhaustiveExploration)->DenseRange(3, 8, 1)->Unit(benchmark::kMillisecond);

void BM_FirstSteps(benchmark::State& state) {
  anacon::ActionExpr e = anacon::ActionExpr::atom("a");
  for (int64_t i = 0; i < state.range(0); ++i) {
    e = anacon::ActionExpr::choice(
        anacon::ActionExpr::sequence(e, anacon::ActionExpr::atom("b")),
        anacon::ActionExpr::concurrent(anacon::ActionExpr::atom("c"), e));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(anacon::first_steps(e));
  }
}
BENCHMARK(BM_FirstSteps)->DenseRange(2, 10, 4);

}  // namespace

BENCHMARK_MAIN();
