#include <benchmark/benchmark.h>

#include "galoispoint/expr.hpp"
#include "galoispoint/pipeline.hpp"

using namespace gp;

namespace {

const InputBlock& block(const std::string& id) {
  static const std::vector<InputBlock> blocks = parse_blocks(bundled_corpus());
  for (const auto& b : blocks)
    if (b.id == id) return b;
  throw Error(Errc::invalid_argument, id);
}

void BM_ResultantKummerQuartic(benchmark::State& st) {
  const FieldPtr f = make_cyclotomic(4);
  KummerPresentation kp{4, to_ratfunc(parse_fraction("t^4 + 1"), f), {RatFunc(2), RatFunc(1), RatFunc(1), RatFunc(1)},
                        root_of_unity(f, 4)};
  for (auto _ : st) benchmark::DoNotOptimize(kummer_minimal_polynomial(kp));
}
BENCHMARK(BM_ResultantKummerQuartic)->Unit(benchmark::kMillisecond);

void BM_AlgebraInverse(benchmark::State& st) {
  const KPoly h = to_kpoly(parse_fraction("x^3 - 3*t*x - t^2 - t"), nullptr);
  const ModulusPtr mod = make_modulus(h);
  const AlgebraElement x = AlgebraElement::generator(mod);
  const AlgebraElement y = x * x + RatFunc::t() * x + AlgebraElement::constant(mod, RatFunc(1));
  for (auto _ : st) benchmark::DoNotOptimize(algebra_inverse(y));
}
BENCHMARK(BM_AlgebraInverse);

void BM_RatFuncArithmetic(benchmark::State& st) {
  const FieldPtr f = make_cyclotomic(3);
  const RatFunc a = to_ratfunc(parse_fraction("(z*t^3 - 2*t + 1)/(t^2 + z)"), f);
  const RatFunc b = to_ratfunc(parse_fraction("(t - z)/(t^3 - 1)"), f);
  for (auto _ : st) benchmark::DoNotOptimize(a * b + a / b);
}
BENCHMARK(BM_RatFuncArithmetic);

void BM_QuarticLiftAndPullback(benchmark::State& st) {
  const Analysis a = run(Command::analyze, block("quartic_kummer_t4"));
  const Moebius m = chart_transfer(*a.moebius);
  const TriPoly phi = a.pointed->chart_curve.form();
  for (auto _ : st) {
    const DeJonquieresMap f = dejonquieres_lift(m);
    benchmark::DoNotOptimize(pullback_divides(f.components(), phi));
  }
}
BENCHMARK(BM_QuarticLiftAndPullback)->Unit(benchmark::kMillisecond);

void BM_ExtendCorpusEntry(benchmark::State& st) {
  const InputBlock& b = block("cusp_quartic_p1");
  for (auto _ : st) benchmark::DoNotOptimize(run(Command::extend, b));
}
BENCHMARK(BM_ExtendCorpusEntry)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
