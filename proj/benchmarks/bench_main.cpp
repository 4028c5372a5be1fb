#include <benchmark/benchmark.h>

#include <random>

#include "ksix/catalog.hpp"
#include "ksix/ck.hpp"
#include "ksix/normal_form.hpp"

namespace {

ksix::IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  ksix::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  ksix::IntMatrix m = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ksix::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(11);
  ksix::IntMatrix m = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ksix::hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_HomLambdaCatalog(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  auto e1 = ksix::catalog_get("e1", n).invariant;
  auto e0 = ksix::catalog_get("e0", n).invariant;
  for (auto _ : state) benchmark::DoNotOptimize(ksix::hom_lambda(e1, e0, {n}).group());
}
BENCHMARK(BM_HomLambdaCatalog)->Arg(2)->Arg(3)->Arg(5);

void BM_HomLambdaSum(benchmark::State& state) {
  const auto n = static_cast<unsigned long>(state.range(0));
  auto e = ksix::catalog_get("Se1+e1+e0", n).invariant;
  for (auto _ : state) benchmark::DoNotOptimize(ksix::hom_lambda(e, e, {n}).group());
}
BENCHMARK(BM_HomLambdaSum)->Arg(2)->Arg(3);

void BM_CuntzKriegerSixTerm(benchmark::State& state) {
  ksix::CKMatrix a(ksix::IntMatrix{{1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
                                   {0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(ksix::six_term(a, {0, 1, 2}));
}
BENCHMARK(BM_CuntzKriegerSixTerm);

void BM_IdealLattice(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.3);
  ksix::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (coin(rng)) m(r, c) = 1;
  }
  ksix::CKMatrix ck(m);
  for (auto _ : state) benchmark::DoNotOptimize(ksix::ideal_lattice(ck));
}
BENCHMARK(BM_IdealLattice)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
