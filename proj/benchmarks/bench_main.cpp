#include <benchmark/benchmark.h>

#include "superinv/minors.hpp"
#include "superinv/relations.hpp"
#include "superinv/sft11.hpp"
#include "superinv/supermatrix.hpp"

namespace {

using namespace superinv;

void BM_BerezinianGeneric(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0)), q = static_cast<std::size_t>(state.range(1));
  const SuperMatrix m = generic_square(p, q, SquareParam::Factored);
  for (auto _ : state) benchmark::DoNotOptimize(berezinian(m));
}
BENCHMARK(BM_BerezinianGeneric)->Args({1, 1})->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_MinorsOfGenericMatrix(benchmark::State& state) {
  auto g = generic_matrix(2, 2, 3, 3);
  const MinorSymbol head = MinorSymbol::plain(false, {1, 2}, {1, 2});
  const MinorSymbol other = MinorSymbol::plain(true, {2, 3}, {1, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(super_minor(g.matrix, head));
    benchmark::DoNotOptimize(super_minor(g.matrix, other));
  }
}
BENCHMARK(BM_MinorsOfGenericMatrix)->Unit(benchmark::kMillisecond);

void BM_VerifySl11Symbolic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rels = sl11_plucker_relations(n, n);
  for (auto _ : state) {
    RelationVerifier v(VerifyOptions{VerifyMode::Symbolic, 0, 0, 0});
    for (const auto& r : rels) benchmark::DoNotOptimize(v.verify(r));
  }
  state.counters["relations"] = static_cast<double>(rels.size());
}
BENCHMARK(BM_VerifySl11Symbolic)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_NormalFormOfRelations(benchmark::State& state) {
  const std::vector<std::pair<Relation, InvariantPolynomial>> rels = sl11_relation_polynomials(2, 3);
  for (auto _ : state) {
    for (const auto& [rel, poly] : rels) benchmark::DoNotOptimize(normal_form_membership(poly, 2, 3));
  }
}
BENCHMARK(BM_NormalFormOfRelations)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
