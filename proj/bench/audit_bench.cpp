// Serial reference sweep versus the OpenMP kernel on the same audits.

#include <benchmark/benchmark.h>

#include "equm/auditor.hpp"
#include "equm/fixtures.hpp"
#include "support/random_models.hpp"

namespace {

using namespace equm;

PrefStructure qualitative_structure(int grid) {
  testing::Gen g(97);
  PrefStructure s = testing::random_structure(g, Regime::NonstandardUtility, grid);
  const auto outcomes = testing::outcome_ids(4);
  UtilityAssignment::Map u;
  for (const auto& o : outcomes) u[o] = g.positive_nsreal();
  s.utility = UtilityAssignment(std::move(u));
  s.generators.clear();
  for (int k = 0; k < 3; ++k) s.generators.push_back(g.standard_lottery(outcomes));
  return s;
}

void audit(benchmark::State& state, Postulate p, Execution e) {
  const PrefStructure s = qualitative_structure(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check(p, s, e));
}

void A1Serial(benchmark::State& st) { audit(st, Postulate::A1, Execution::Serial); }
void A1Parallel(benchmark::State& st) { audit(st, Postulate::A1, Execution::Parallel); }
void A3PrimeSerial(benchmark::State& st) { audit(st, Postulate::A3Prime, Execution::Serial); }
void A3PrimeParallel(benchmark::State& st) { audit(st, Postulate::A3Prime, Execution::Parallel); }
void A2PrimeSerial(benchmark::State& st) { audit(st, Postulate::A2Prime, Execution::Serial); }
void A2PrimeParallel(benchmark::State& st) { audit(st, Postulate::A2Prime, Execution::Parallel); }

}  // namespace

BENCHMARK(A1Serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(A1Parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(A3PrimeSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(A3PrimeParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(A2PrimeSerial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(A2PrimeParallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
