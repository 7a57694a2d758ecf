#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "gforms/classifier.hpp"
#include "gforms/cohomology.hpp"
#include "gforms/crossed_product.hpp"
#include "gforms/linalg.hpp"
#include "gforms/root_datum.hpp"

using namespace gforms;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(7);
  std::uniform_int_distribution<int> d(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(g);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_FundamentalGroupE8(benchmark::State& state) {
  const auto rd = build_root_datum(CartanType::parse("E8"), Isogeny::adjoint);
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_group(rd.datum));
}
BENCHMARK(BM_FundamentalGroupE8);

static void BM_H2Bar(benchmark::State& state) {
  const auto gamma = state.range(0) == 0 ? FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))
                                         : FiniteGroup::cyclic(static_cast<std::size_t>(state.range(0)));
  const auto m = GModule::trivial(gamma, {2, 4});
  for (auto _ : state) benchmark::DoNotOptimize(h2_bar(m));
}
BENCHMARK(BM_H2Bar)->Arg(0)->Arg(3)->Arg(6);

static void BM_CrossedProductBuild(benchmark::State& state) {
  auto k = std::make_shared<const GaloisField>(state.range(0) == 2 ? GaloisField::quadratic(-1)
                                                                   : GaloisField::cyclotomic(static_cast<unsigned>(state.range(0))));
  const GaloisExtension ext(k);
  const auto z = trivial_cochain(ext);
  for (auto _ : state) benchmark::DoNotOptimize(CrossedProductAlgebra::build(ext, z));
}
BENCHMARK(BM_CrossedProductBuild)->Arg(2)->Arg(5)->Arg(8);

static void BM_ClassifyQuasisplitD4(benchmark::State& state) {
  const auto out = outer_automorphisms(build_root_datum(CartanType::parse("D4"), Isogeny::adjoint)).group;
  const auto s3 = FiniteGroup::symmetric(3);
  for (auto _ : state) benchmark::DoNotOptimize(classify_quasisplit(s3, out));
}
BENCHMARK(BM_ClassifyQuasisplitD4);
BENCHMARK_MAIN();
