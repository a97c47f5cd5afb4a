#include <benchmark/benchmark.h>

#include <numbers>

#include "fwm/classical.hpp"
#include "fwm/coherent.hpp"
#include "fwm/dualhahn.hpp"
#include "fwm/quantum.hpp"
#include "fwm/spinrep.hpp"

namespace {

using namespace fwm;

void BM_TransitionMatrix(benchmark::State& state) {
  const DualHahnParams p{3, 5, int(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(transition_matrix(p));
}
BENCHMARK(BM_TransitionMatrix)->Arg(10)->Arg(40)->Arg(80);

void BM_TridiagonalQL(benchmark::State& state) {
  SectorShape sh;
  sh.N = int(state.range(0)), sh.gamma = 4, sh.delta = 7;
  const SymTridiagonal h = tridiagonal_h0(sh);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_diagonalize(h));
}
BENCHMARK(BM_TridiagonalQL)->Arg(40)->Arg(120);

void BM_SectorPropagator(benchmark::State& state) {
  FourWaveParams p;
  p.g = 0.7;
  const SectorLabel c = label_for_shape(int(state.range(0)), 2, 3, Subcase::i);
  for (auto _ : state) benchmark::DoNotOptimize(propagator(c, p, 1.3));
}
BENCHMARK(BM_SectorPropagator)->Arg(10)->Arg(40);

void BM_FullHamiltonian(benchmark::State& state) {
  FourWaveParams p;
  for (auto _ : state) benchmark::DoNotOptimize(build_full_hamiltonian(int(state.range(0)), p));
}
BENCHMARK(BM_FullHamiltonian)->Arg(6)->Arg(12);

void BM_ClosedFormTrajectory(benchmark::State& state) {
  FourWaveParams p;
  const ReducedCoords rc{1.0, std::numbers::pi / 2, {2.0, 2.0, 0.0}};
  const std::vector<double> grid = uniform_grid(0.0, 10.0, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(solve_reduced(rc, p, grid));
}
BENCHMARK(BM_ClosedFormTrajectory);

void BM_Rk4Full(benchmark::State& state) {
  FourWaveParams p;
  const ModeState z{{cplx(0, 1), cplx(1), cplx(1), cplx(1)}};
  for (auto _ : state) benchmark::DoNotOptimize(rk4_full(z, p, 10.0, 1e-3, 100));
}
BENCHMARK(BM_Rk4Full);

void BM_StarProduct(benchmark::State& state) {
  const NormalOrderedObservable x = generator_symbol(Generator::x), y = generator_symbol(Generator::y);
  for (auto _ : state) benchmark::DoNotOptimize(star_product(x, y, 0.3));
}
BENCHMARK(BM_StarProduct);

void BM_RadialMoments(benchmark::State& state) {
  const SectorLabel c = label_for_shape(3, 2, 2, Subcase::i);
  for (auto _ : state) benchmark::DoNotOptimize(radial_moments(c));
}
BENCHMARK(BM_RadialMoments)->Unit(benchmark::kMillisecond);

void BM_SpinOperators(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_spin_ops(6, 1.0));
}
BENCHMARK(BM_SpinOperators);

}  // namespace

BENCHMARK_MAIN();
