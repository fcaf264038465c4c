#include <benchmark/benchmark.h>

#include "ellsurf/constructions.hpp"
#include "ellsurf/curve.hpp"
#include "ellsurf/scanner.hpp"

using namespace ellsurf;

namespace {

Poly dense(int degree) {
  std::vector<Rat> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(mpz_class(i * 7 - 13), mpz_class(i + 2));
  return Poly(c);
}

void BM_PolyMul(benchmark::State& state) {
  const Poly a = dense(static_cast<int>(state.range(0))), b = dense(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

void BM_Compose(benchmark::State& state) {
  const Poly outer = dense(6);
  const RatFn inner(dense(4), dense(2));
  for (auto _ : state) benchmark::DoNotOptimize(compose(outer, inner));
}
BENCHMARK(BM_Compose);

void BM_Thm5Construct(benchmark::State& state) {
  const Poly g(std::vector<Rat>{0, 0, 0, 1, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(thm5_sextic(g));
}
BENCHMARK(BM_Thm5Construct)->Unit(benchmark::kMillisecond);

void BM_VerifySection(benchmark::State& state) {
  const ConstructionResult r = thm2_quartic(Poly(std::vector<Rat>{1, 1, 0, 0, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(verify_section(r.surface, r.section));
}
BENCHMARK(BM_VerifySection);

void BM_OrderClassify(benchmark::State& state) {
  const CurveQ E(0, Rat(mpz_class("98016435317683"), mpz_class("23298085122481")));
  const PointQ P(Rat(-3531, 2197), Rat(1137934, 4826809));
  for (auto _ : state) benchmark::DoNotOptimize(order_classify(E, P));
}
BENCHMARK(BM_OrderClassify);

void BM_ScanMember(benchmark::State& state) {
  const auto tc = t_candidates(6);
  for (auto _ : state) benchmark::DoNotOptimize(scan_member(Family::Fx, {1, -1, 1}, tc, 300, 6));
}
BENCHMARK(BM_ScanMember)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
