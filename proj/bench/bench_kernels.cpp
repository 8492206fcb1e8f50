// Serial reference against the OpenMP kernels. Arg 0 selects the path.

#include <benchmark/benchmark.h>

#include "suff/kernels.hpp"
#include "suff/rng.hpp"

using namespace suff;
using kernels::Exec;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (double& v : m.data) v = rng.normal();
  return m;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) == 0 ? "serial" : "openmp"); }

void BM_dense_forward(benchmark::State& s) {
  const auto A = random_matrix(128, 784, 1);
  const auto W = random_matrix(784, 256, 2);
  std::vector<double> b(256, 0.1);
  Matrix Z;
  for (auto _ : s) {
    kernels::dense_forward(exec_of(s), A, W, b, Z);
    benchmark::DoNotOptimize(Z.data.data());
  }
  label(s);
}

void BM_dense_backward_params(benchmark::State& s) {
  const auto A = random_matrix(128, 784, 1);
  const auto dZ = random_matrix(128, 256, 3);
  Matrix dW;
  std::vector<double> db(256);
  for (auto _ : s) {
    kernels::dense_backward_params(exec_of(s), A, dZ, dW, db);
    benchmark::DoNotOptimize(dW.data.data());
  }
  label(s);
}

void BM_pair_dot(benchmark::State& s) {
  const auto U = random_matrix(128, 128, 4);
  std::vector<kernels::RowPair> pairs;
  for (std::uint32_t i = 0; i < 128; ++i)
    for (std::uint32_t j = i + 1; j < 128; ++j) pairs.push_back({i, j});
  std::vector<double> k(pairs.size());
  for (auto _ : s) {
    kernels::pair_dot(exec_of(s), U, pairs, k);
    benchmark::DoNotOptimize(k.data());
  }
  label(s);
}

void BM_normalize_rows(benchmark::State& s) {
  const auto V = random_matrix(1024, 128, 5);
  Matrix U;
  std::vector<double> norms;
  for (auto _ : s) {
    kernels::normalize_rows(exec_of(s), V, 1.0, true, U, norms);
    benchmark::DoNotOptimize(U.data.data());
  }
  label(s);
}

void BM_min_directional(benchmark::State& s) {
  const auto D = random_matrix(10000, 3, 6);
  const std::vector<double> m = {0.3, -0.2, 0.5};
  for (auto _ : s) benchmark::DoNotOptimize(kernels::min_directional(exec_of(s), D, m, -1.0));
  label(s);
}

}  // namespace

BENCHMARK(BM_dense_forward)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_dense_backward_params)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_pair_dot)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_normalize_rows)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_min_directional)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
