// Copyright (c) 2026 the grushin authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "grushin/analysis.hpp"
#include "grushin/linalg.hpp"
#include "grushin/problem.hpp"
#include "grushin/spectral.hpp"
#include "grushin/state_space.hpp"
#include "grushin/wave.hpp"

namespace {

using namespace grushin;

ComplexMatrix random_matrix(Index rows, Index cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(gen), normal(gen));
  }
  return ComplexMatrix(std::move(m));
}

StateSpaceSystem random_system(Index n, Index m, std::uint64_t seed) {
  return StateSpaceSystem(random_matrix(n, n, seed), random_matrix(n, m, seed + 1));
}

void BM_invert_grushin(benchmark::State& state) {
  const Index n = state.range(0);
  const StateSpaceSystem sys = random_system(n, 2, 42);
  const GrushinProblem problem = grushin_problem_at(sys, Complex(3.0, 0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(invert_grushin(problem));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_invert_grushin)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_matrix_exponential(benchmark::State& state) {
  const Index n = state.range(0);
  const ComplexMatrix a = random_matrix(n, n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_exponential(a, 0.1));
  }
}
BENCHMARK(BM_matrix_exponential)->Arg(8)->Arg(32);

void BM_gramian(benchmark::State& state) {
  const Index n = state.range(0);
  const StateSpaceSystem sys = random_system(n, 2, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gramian(sys, GramianKind::Observability, 1.0));
  }
}
BENCHMARK(BM_gramian)->Arg(8)->Arg(32);

void BM_hautus_sweep(benchmark::State& state) {
  const Index n = state.range(0);
  const StateSpaceSystem sys = random_system(n, 2, 13);
  std::vector<double> grid;
  for (int i = 0; i < 128; ++i) grid.push_back(-4.0 + 8.0 * i / 127.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hautus_margin(sys, grid));
  }
}
BENCHMARK(BM_hautus_sweep)->Arg(8)->Arg(16);

void BM_spectral_projection(benchmark::State& state) {
  const StateSpaceSystem sys = random_system(6, 1, 17);
  const ContourSpec contour(Complex(0, 0), 12.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_projection(sys, contour));
  }
}
BENCHMARK(BM_spectral_projection)->Arg(64)->Arg(256);

void BM_wave_margin_scan(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  std::vector<double> grid;
  for (double w = 0.5; w <= modes + 0.5; w += 0.05) grid.push_back(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wave_margin_scan({.n_modes = modes}, grid));
  }
}
BENCHMARK(BM_wave_margin_scan)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
