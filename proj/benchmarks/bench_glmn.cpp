#include <benchmark/benchmark.h>

#include "glmn/analysis.hpp"
#include "glmn/verma.hpp"

using namespace glmn;

namespace {

void BM_FieldMul(benchmark::State& st) {
  const Field F = Field::make(5, static_cast<unsigned>(st.range(0)));
  std::uint64_t s = 1;
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = F.from_code(splitmix64(s) % F.order());
  Elem acc = F.one();
  for (auto _ : st) {
    for (Elem x : xs) acc = F.add(F.mul(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(3)->Arg(5);

void BM_RowReduce(benchmark::State& st) {
  const Field F = Field::make(5);
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  std::uint64_t s = 7;
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = F.from_code(splitmix64(s) % 5);
  for (auto _ : st) benchmark::DoNotOptimize(row_reduce(m).rank);
}
BENCHMARK(BM_RowReduce)->Arg(20)->Arg(100)->Arg(400);

void BM_Normalize(benchmark::State& st) {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, 1, F);
  std::uint64_t s = 3;
  std::vector<std::vector<int>> words(64);
  for (auto& w : words) {
    w.resize(6);
    for (int& g : w) g = static_cast<int>(splitmix64(s) % A.dim());
  }
  for (auto _ : st) {
    // fresh context each round so memoization does not hide the work
    const ReductionContext ctx(A, Character(A));
    for (const auto& w : words) benchmark::DoNotOptimize(ctx.normalize(w, F.one()));
  }
}
BENCHMARK(BM_Normalize);

void BM_VermaBuild(benchmark::State& st) {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, static_cast<int>(st.range(0)), F);
  const VermaFactory fac(A, Character(A));
  const Weight w = make_weight(F, std::vector<std::int64_t>(static_cast<std::size_t>(A.size()), 1));
  for (auto _ : st) benchmark::DoNotOptimize(fac.build(w).dim);
}
BENCHMARK(BM_VermaBuild)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_IsSimple(benchmark::State& st) {
  const Field F = Field::make(5);
  const SuperAlgebra A = SuperAlgebra::build(2, static_cast<int>(st.range(0)), F);
  const ModuleRep Z = build_baby_verma(A, Character(A), make_weight(F, std::vector<std::int64_t>(A.size(), 0)));
  for (auto _ : st) benchmark::DoNotOptimize(is_simple(Z).simple);
}
BENCHMARK(BM_IsSimple)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
