// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "zariski/construction.hpp"
#include "zariski/cover.hpp"
#include "zariski/kernels.hpp"
#include "zariski/poly_parser.hpp"

using namespace zariski;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

// Random form of degree d whose y^d coefficient is a nonzero constant.
HomogeneousPoly monic_in_y(int d, Rng& rng) {
  return random_form(d, rng, 10) + HomogeneousPoly::monomial({0, d, 0}, AlgNum(11));
}

void BM_Resultant(benchmark::State& state) {
  const int d = static_cast<int>(state.range(1));
  Rng rng(42);
  BiPoly f = dehomogenize(monic_in_y(d, rng), 1, 2);
  BiPoly g = dehomogenize(monic_in_y(d, rng), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_in_v(f, g, d * d, mode(state)));
}
BENCHMARK(BM_Resultant)->ArgNames({"parallel", "degree"})->ArgsProduct({{0, 1}, {4, 6, 8}})->Unit(benchmark::kMillisecond);

void BM_CurvesThrough(benchmark::State& state) {
  PicardContext ctx = make_picard_context(make_curve(parse_curve_equation("x^4 + y^4 + z^4 + 3*x^2*y*z")));
  IntersectionDivisor cut = intersect(ctx.curve, make_curve(parse_curve_equation("x*y - 2*z^2 + x*z")));
  std::vector<DivisorTerm> conditions;
  for (auto& p : cut.points) conditions.push_back({p.cluster, 2L * p.multiplicity});
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(curves_through(ctx, conditions, m, mode(state)));
}
BENCHMARK(BM_CurvesThrough)->ArgNames({"parallel", "degree"})->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_TauSweep(benchmark::State& state) {
  static const Decomposition quartic = [] {
    TypedPair p = build_4663(3).pair;
    return build_decomposition(p.d, {{p.c}});
  }();
  static const Decomposition tangents = four_tangent_arrangement(false).dec;
  const Decomposition& dec = state.range(1) ? quartic : tangents;
  for (auto _ : state) benchmark::DoNotOptimize(tau_kernel(dec, mode(state)));
}
BENCHMARK(BM_TauSweep)->ArgNames({"parallel", "quartic"})->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
