#include <benchmark/benchmark.h>

#include <random>

#include "parind/group_spec.hpp"
#include "parind/membership.hpp"
#include "parind/s_group.hpp"
#include "parind/structural.hpp"

using namespace parind;

namespace {

const char* const kGroups[] = {"S4", "S3xC4", "A5", "D64", "S5"};

GroupPtr group(int i) { return parse_group_spec(kGroups[i]); }

}  // namespace

static void BM_Stabilizer(benchmark::State& state) {
  const auto gens = group(static_cast<int>(state.range(0)))->generators();
  const auto degree = group(static_cast<int>(state.range(0)))->degree();
  for (auto _ : state) {
    auto g = std::make_shared<PermGroup>(degree, gens);
    benchmark::DoNotOptimize(g->order());
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Stabilizer)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

static void BM_SubgroupLattice(benchmark::State& state) {
  for (auto _ : state) {
    SubgroupLattice lattice(group(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(lattice.size());
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_SubgroupLattice)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state) {
  for (auto _ : state) {
    CharacterTable t(group(static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(t.size());
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  IntMatrix m(2 * n, n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m).rank);
}
BENCHMARK(BM_Hnf)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

static void BM_FamilyAndSpan(benchmark::State& state) {
  const auto g = group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto c = GroupContext::make(g);
    const auto fam = theorem12_family(c);
    benchmark::DoNotOptimize(span_report(fam, 5, 1).ok());
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_FamilyAndSpan)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_MembershipSolve(benchmark::State& state) {
  auto c = GroupContext::make(group(static_cast<int>(state.range(0))));
  const auto fam = theorem12_family(c);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const GenChar x = random_S_element(*c, ++seed, 3);
    state.ResumeTiming();
    benchmark::DoNotOptimize(membership_solve(fam, x));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_MembershipSolve)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

static void BM_Structural(benchmark::State& state) {
  auto c = GroupContext::make(group(static_cast<int>(state.range(0))));
  const auto fam = theorem12_family(c);
  for (auto _ : state)
    for (const auto& h : c->lattice().classes()) {
      const auto tree = decompose_structural(c, c->rho(h.elements));
      benchmark::DoNotOptimize(flatten(*tree, fam));
    }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Structural)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
