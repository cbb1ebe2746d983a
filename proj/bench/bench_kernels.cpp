// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "liealg/lifted.hpp"
#include "liealg/linalg.hpp"

using namespace liealg;

namespace {

DenseMatrix random_matrix(std::size_t r, std::size_t c) {
  std::mt19937_64 rng(r * 131 + c);
  std::uniform_real_distribution<double> u(-1, 1);
  DenseMatrix m(r, c);
  for (double& x : m.data()) x = u(rng);
  return m;
}

std::vector<Partition> grid(std::size_t n) { return {uniform_partition(-1, 1, n), uniform_partition(-1, 1, n)}; }

template <DenseMatrix (*F)(const DenseMatrix&, const DenseMatrix&)>
void BM_mat_mul(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const DenseMatrix a = random_matrix(n, n), b = random_matrix(n, n);
  for (auto _ : st) benchmark::DoNotOptimize(F(a, b));
  st.SetComplexityN(st.range(0));
}

template <DenseMatrix (*F)(const DenseMatrix&, const DenseMatrix&)>
void BM_kron(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const DenseMatrix a = random_matrix(n, n), b = random_matrix(n, n);
  for (auto _ : st) benchmark::DoNotOptimize(F(a, b));
}

template <DenseMatrix (*F)(const LiftedOperator&)>
void BM_realize(benchmark::State& st) {
  const auto ps = grid(static_cast<std::size_t>(st.range(0)));
  const auto w = lifted_diff(1, ps);
  for (auto _ : st) benchmark::DoNotOptimize(F(w));
}

void BM_lu_solve(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  DenseMatrix a = random_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<double>(n);
  const Vector b(n, 1.0);
  for (auto _ : st) benchmark::DoNotOptimize(lu_solve(a, b));
}

}  // namespace

BENCHMARK(BM_mat_mul<serial::mat_mul>)->Name("mat_mul/serial")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_mat_mul<mat_mul>)->Name("mat_mul/omp")->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_kron<serial::kron>)->Name("kron/serial")->DenseRange(8, 32, 8);
BENCHMARK(BM_kron<kron>)->Name("kron/omp")->DenseRange(8, 32, 8);
BENCHMARK(BM_realize<serial::realize>)->Name("realize/serial")->DenseRange(10, 20, 5);
BENCHMARK(BM_realize<realize>)->Name("realize/omp")->DenseRange(10, 20, 5);
BENCHMARK(BM_lu_solve)->Name("lu_solve")->RangeMultiplier(2)->Range(64, 512);

BENCHMARK_MAIN();
