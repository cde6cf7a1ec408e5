#include <benchmark/benchmark.h>

#include "porc/diophantine.hpp"
#include "porc/finite_field.hpp"
#include "porc/lie_engine.hpp"
#include "porc/orbit_counter.hpp"

namespace {

// A prime = 1 mod 12 with V_p = 8, so the quartic splits completely.
constexpr std::uint64_t kSplitPrime = 999181;

void BM_PolyRootsScan(benchmark::State& state) {
  const porc::PrimeField F(4093);
  const porc::FpPoly f = porc::quartic_poly(F);
  for (auto _ : state) benchmark::DoNotOptimize(porc::poly_roots(f, F));
}
BENCHMARK(BM_PolyRootsScan);

void BM_PolyRootsSplitting(benchmark::State& state) {
  const porc::PrimeField F(kSplitPrime);
  const porc::FpPoly f = porc::octic_poly(F);
  for (auto _ : state) benchmark::DoNotOptimize(porc::poly_roots(f, F));
}
BENCHMARK(BM_PolyRootsSplitting);

void BM_CountVp(benchmark::State& state) {
  const porc::PrimeField F(kSplitPrime);
  for (auto _ : state) benchmark::DoNotOptimize(porc::count_vp(F));
}
BENCHMARK(BM_CountVp);

void BM_Burnside(benchmark::State& state) {
  const porc::PrimeField F(static_cast<std::uint64_t>(state.range(0)));
  const porc::ActionGroup G = porc::ActionGroup::for_prime(F);
  for (auto _ : state) benchmark::DoNotOptimize(porc::burnside_dp(F, G));
}
BENCHMARK(BM_Burnside)->Arg(61)->Arg(4093)->Arg(kSplitPrime);

void BM_BruteOrbits(benchmark::State& state) {
  const porc::PrimeField F(static_cast<std::uint64_t>(state.range(0)));
  const porc::ActionGroup G = porc::ActionGroup::for_prime(F);
  for (auto _ : state) benchmark::DoNotOptimize(porc::brute_orbits(F, G, 199));
}
BENCHMARK(BM_BruteOrbits)->Arg(23)->Arg(61)->Unit(benchmark::kMillisecond);

void BM_Covering(benchmark::State& state) {
  const porc::PrimeField F(101);
  for (auto _ : state) benchmark::DoNotOptimize(porc::build_covering(F));
}
BENCHMARK(BM_Covering)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
