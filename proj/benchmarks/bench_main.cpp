#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "thl/canonical_code.hpp"
#include "thl/gram.hpp"
#include "thl/homfly.hpp"
#include "thl/reidemeister.hpp"
#include "thl/signs.hpp"
#include "thl/tangle_build.hpp"
#include "thl/thompson.hpp"

namespace {

using namespace thl;

// Closure of sigma1^n on two strands: n crossings, the standard torus family.
Tangle torus_link(int crossings) {
  Tangle t = identity_tangle(SignSeq::parse("++"));
  for (int i = 0; i < crossings; ++i) t = conjugate_by_crossing(t, 1, true);
  return close_tangle(t);
}

void bm_multiply(benchmark::State& state) {
  const GroupElement a = eval_word("x0 x1 x0^-1 x1 x0");
  const GroupElement b = eval_word("x1^-1 x0 x1 x0^-1");
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(bm_multiply);

void bm_build_link(benchmark::State& state) {
  const GroupElement g = eval_word("x0 x1 x0 x1");
  for (auto _ : state) benchmark::DoNotOptimize(build_link(g, Convention::standard));
}
BENCHMARK(bm_build_link);

void bm_canonical_code(benchmark::State& state) {
  const Tangle t = torus_link(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(t));
}
BENCHMARK(bm_canonical_code)->Arg(4)->Arg(8)->Arg(16);

void bm_simplify(benchmark::State& state) {
  Tangle t = torus_link(6);
  for (int i = 0; i < 4; ++i) t = r1_add(t, int(i) % int(t.arcs.size()), i % 2 == 0);
  for (auto _ : state) benchmark::DoNotOptimize(simplify_diagram(t));
}
BENCHMARK(bm_simplify);

void bm_homfly_cold(benchmark::State& state) {
  const Tangle t = torus_link(int(state.range(0)));
  for (auto _ : state) {
    SkeinEngine engine;
    benchmark::DoNotOptimize(engine.polynomial(t));
  }
}
BENCHMARK(bm_homfly_cold)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMicrosecond);

void bm_homfly_element_cold(benchmark::State& state) {
  const Tangle link = build_link(eval_word("x0 x1 x0 x1"), Convention::standard);
  for (auto _ : state) {
    SkeinEngine engine;
    benchmark::DoNotOptimize(engine.polynomial(link));
  }
}
BENCHMARK(bm_homfly_element_cold)->Unit(benchmark::kMicrosecond);

void bm_phi_warm(benchmark::State& state) {
  SkeinEngine engine;
  const GroupElement g = eval_word("x0 x1 x0 x1");
  const EvalParams prm = EvalParams::at(6, 2);
  phi(g, prm, engine);
  for (auto _ : state) benchmark::DoNotOptimize(phi(g, prm, engine));
}
BENCHMARK(bm_phi_warm);

void bm_jacobi(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      m[i][j] = i == j ? Complex(u(rng)) : Complex(u(rng), u(rng));
      m[j][i] = std::conj(m[i][j]);
    }
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(m));
}
BENCHMARK(bm_jacobi)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
