#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "sparsefac/bifactor.hpp"
#include "sparsefac/factorizer.hpp"
#include "sparsefac/polytope.hpp"
#include "sparsefac/unifactor.hpp"

using namespace sparsefac;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::make(2, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(1);
  Elem a = f.at(rng() % f.order()), b = f.at(1 + rng() % (f.order() - 1));
  for (auto _ : state) {
    a = f.add(f.mul(a, b), f.one());
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(8)->Arg(16);

void BM_FieldInv(benchmark::State& state) {
  const Field f = Field::make(static_cast<std::uint32_t>(state.range(0)));
  Elem a = f.from_int(3);
  for (auto _ : state) {
    a = f.add(f.inv(a), f.one());
    if (a.is_zero()) a = f.one();
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldInv)->Arg(7)->Arg(65521);

void BM_FactorUnivariate(benchmark::State& state) {
  const Field f = Field::make(65521);
  std::mt19937_64 rng(2);
  std::vector<Elem> c(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& x : c) x = f.at(rng() % f.order());
  c.back() = f.one();
  const UniPoly p(f, c);
  for (auto _ : state) benchmark::DoNotOptimize(factor_univariate(p));
}
BENCHMARK(BM_FactorUnivariate)->Arg(8)->Arg(32)->Arg(64);

void BM_FactorBivariate(benchmark::State& state) {
  const Field f = Field::make(13);
  const auto g = parse_polynomial("(x1^3 + x1*x2^2 + 2)*(x1^2*x2 + x2 + 5)*(x1 + x2^2 + 1)", f).poly;
  const BiPoly b = BiPoly::from_sparse(g);
  for (auto _ : state) benchmark::DoNotOptimize(factor_bivariate(b));
}
BENCHMARK(BM_FactorBivariate);

void BM_FactorMultivariate(benchmark::State& state) {
  const Field f = Field::make(13);
  const char* inputs[] = {
      "(x1*x3 + x2)*(x2*x3 + x1 + 1)*(x1 + x2)^2",
      "(x1*x2 + x3*x4 + 1)*(x1*x3 + x2 + x4)^2",
  };
  const auto g = parse_polynomial(inputs[state.range(0)], f).poly;
  for (auto _ : state) benchmark::DoNotOptimize(factor(g));
}
BENCHMARK(BM_FactorMultivariate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NewtonVertices(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const std::size_t n = 4;
  std::set<Point> pts;
  while (pts.size() < static_cast<std::size_t>(state.range(0))) {
    Point p(n);
    for (auto& x : p) x = static_cast<long>(rng() % 4);
    pts.insert(p);
  }
  const Support e(n, std::vector<Point>(pts.begin(), pts.end()));
  for (auto _ : state) benchmark::DoNotOptimize(newton_vertices(e));
}
BENCHMARK(BM_NewtonVertices)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
