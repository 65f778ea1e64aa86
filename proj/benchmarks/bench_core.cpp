#include <benchmark/benchmark.h>

#include "rstar/battery.hpp"
#include "rstar/corpus.hpp"
#include "rstar/lattice.hpp"
#include "rstar/pid.hpp"
#include "rstar/ring_spec.hpp"
#include "rstar/star.hpp"

namespace {

using namespace rstar;

const char* const kSpecs[] = {"Z/12", "Z/64", "F3[x]/(x^3)", "Z/2 x Z/2 x Z/2 x Z/2", "Z/4 x Z/4 x Z/4"};

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto ring = parse_ring_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ideals(ring).size());
  state.SetLabel(ring->label());
}
BENCHMARK(BM_EnumerateIdeals)->DenseRange(0, 4);

void BM_StarExhaustive(benchmark::State& state) {
  const auto lattice = enumerate_ideals(parse_ring_spec(kSpecs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(star_check_finite(lattice, kMaxExhaustiveCap).checks);
  state.SetLabel(lattice.ring().label() + ", " + std::to_string(lattice.size()) + " ideals");
}
BENCHMARK(BM_StarExhaustive)->DenseRange(0, 3);

void BM_StarCertified(benchmark::State& state) {
  const auto lattice = enumerate_ideals(parse_ring_spec(kSpecs[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(star_check_finite(lattice, 0).checks);
  state.SetLabel(lattice.ring().label());
}
BENCHMARK(BM_StarCertified)->DenseRange(0, 4);

void BM_PowerOrbits(benchmark::State& state) {
  const auto ring = parse_ring_spec(kSpecs[state.range(0)]);
  for (auto _ : state) {
    PowerOrbits orbits(*ring);
    benchmark::DoNotOptimize(orbits.orbit(1));
  }
}
BENCHMARK(BM_PowerOrbits)->DenseRange(0, 4);

void BM_TheoremBattery(benchmark::State& state) {
  const auto ring = parse_ring_spec(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_battery(ring).statements.size());
  state.SetLabel(ring->label());
}
BENCHMARK(BM_TheoremBattery)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_BuildCorpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_corpus(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_BuildCorpus)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_IntegerFactor(benchmark::State& state) {
  const auto Z = pid::Domain::integers();
  const pid::Generator n = std::uint64_t{999983} * 999979;
  for (auto _ : state) benchmark::DoNotOptimize(Z.factor(n).size());
}
BENCHMARK(BM_IntegerFactor);

void BM_PolyFactor(benchmark::State& state) {
  const auto F2 = pid::Domain::polynomials(2);
  const auto f = F2.parse_generator("x^12+x^7+x^5+x^3+1");
  for (auto _ : state) benchmark::DoNotOptimize(F2.factor(f).size());
}
BENCHMARK(BM_PolyFactor);

}  // namespace

BENCHMARK_MAIN();
