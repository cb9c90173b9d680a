#include <benchmark/benchmark.h>

#include "spinline/invariant.hpp"

#include "spinline/holonomy.hpp"

using namespace spinline;

namespace {

Matrix random_matrix(SplitMix64& rng, int r, int c) {
  Matrix m(r, c);
  for (auto& v : m.a) v = random_gaussian(rng, 4, 2);
  return m;
}

void BM_build_rep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CliffordRep rep = build_rep({1, n - 1});
    benchmark::DoNotOptimize(rep.gen.back());
  }
}
BENCHMARK(BM_build_rep)->Arg(4)->Arg(8)->Arg(10);

void BM_clifford_relations(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  CliffordRep rep = build_rep({1, n - 1});
  for (auto _ : state) verify_clifford_relations(rep);
}
BENCHMARK(BM_clifford_relations)->Arg(6)->Arg(8)->Arg(10);

void BM_rref(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SplitMix64 rng(1);
  Matrix m = random_matrix(rng, n, 2 * n);
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_char_poly(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SplitMix64 rng(2);
  Matrix m = random_matrix(rng, n, n);
  for (auto _ : state) {
    Poly p = char_poly(m);
    benchmark::DoNotOptimize(p.c.size());
  }
}
BENCHMARK(BM_char_poly)->Arg(4)->Arg(8)->Arg(16);

void BM_gaussian_roots_kahler(benchmark::State& state) {
  // characteristic polynomial of the Kahler 2-form action on Delta_8
  CliffordRep rep = build_rep({0, 8});
  Bivector b(8);
  for (int i = 0; i < 8; i += 2) b.at(i, i + 1) = 1;
  Poly p = char_poly(two_form_action(rep, b));
  for (auto _ : state) {
    RootResult r = gaussian_roots(p);
    benchmark::DoNotOptimize(r.roots.size());
  }
}
BENCHMARK(BM_gaussian_roots_kahler);

void BM_invariant_lines_u3(benchmark::State& state) {
  CliffordRep rep = build_rep({0, 6});
  LieAlgebraRep u3 = unitary_family(UnitaryKind::u, 0, 3);
  std::vector<Matrix> gens = lambda_images(rep, u3, Normalization::half);
  for (auto _ : state) {
    LineReport r = invariant_lines(gens, rep.dim);
    benchmark::DoNotOptimize(r.isolated_count);
  }
}
BENCHMARK(BM_invariant_lines_u3);

void BM_g2_stabilizer(benchmark::State& state) {
  for (auto _ : state) {
    LieAlgebraRep g = form_stabilizer({0, 7}, g2_form());
    benchmark::DoNotOptimize(g.dim());
  }
}
BENCHMARK(BM_g2_stabilizer);

}  // namespace

BENCHMARK_MAIN();
