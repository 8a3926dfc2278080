#include <benchmark/benchmark.h>

#include "ionraman/constants.hpp"
#include "ionraman/dynamics.hpp"
#include "ionraman/raman.hpp"
#include "ionraman/specfun.hpp"
#include "ionraman/trapmodes.hpp"

namespace cn = ionraman::constants;
using namespace ionraman;

static void BM_Wigner3j(benchmark::State& state) {
  const auto j = HalfInt::from_twice(static_cast<int>(state.range(0)));
  const auto one = HalfInt::from_int(1);
  const auto m = HalfInt::from_twice(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::wigner3j(j, one, j, m, HalfInt::from_int(-1),
                                               HalfInt::from_twice(1)));
}
BENCHMARK(BM_Wigner3j)->Arg(1)->Arg(5)->Arg(15);

static void BM_DisplacementElement(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::displacement_element(n, n + 1, specfun::Xi{0.1}));
}
BENCHMARK(BM_DisplacementElement)->Arg(1)->Arg(8)->Arg(32);

static void BM_ModeEigensystem(benchmark::State& state) {
  const trapmodes::TrapConfig cfg{static_cast<int>(state.range(0)), cn::two_pi * 1e6,
                                  cn::ca40_mass};
  for (auto _ : state) benchmark::DoNotOptimize(trapmodes::mode_eigensystem(cfg));
}
BENCHMARK(BM_ModeEigensystem)->Arg(2)->Arg(10)->Arg(30);

static void BM_ApplyPulse(benchmark::State& state) {
  auto sv = dynamics::StateVector::ground(2, static_cast<int>(state.range(0)), 4, 3);
  dynamics::PulseSpec pulse;
  pulse.kind = dynamics::PulseSpec::Kind::U;
  pulse.theta = cn::pi / 2.0;
  for (auto _ : state) {
    dynamics::apply_pulse(sv, pulse, 0);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_ApplyPulse)->Arg(1)->Arg(3)->Arg(5);

static void BM_CzGate(benchmark::State& state) {
  for (auto _ : state) {
    auto sv = dynamics::StateVector::ground(2, 2, 2, 3);
    dynamics::cz_gate_sequence(sv, 0, 1);
    benchmark::DoNotOptimize(sv);
  }
}
BENCHMARK(BM_CzGate);

BENCHMARK_MAIN();
