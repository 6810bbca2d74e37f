#include <benchmark/benchmark.h>

#include <qalg/parser.hpp>
#include <qalg/polygon.hpp>
#include <qalg/roots.hpp>
#include <qalg/series.hpp>
#include <qalg/transforms.hpp>

#include <string>
#include <vector>

using namespace qalg;

namespace {

QOperator fixture(const std::string& name) {
  return load_equation_file(std::string(QALG_FIXTURE_DIR) + "/" + name + ".qeq").parsed;
}

void BM_ExactCoefficients(benchmark::State& state) {
  QOperator p = fixture("qcatalan");
  for (auto _ : state) benchmark::DoNotOptimize(solve_coefficients(p, state.range(0)));
}
BENCHMARK(BM_ExactCoefficients)->Arg(10)->Arg(20)->Arg(30);

void BM_NumericCoefficients(benchmark::State& state) {
  QOperator p = to_numeric(fixture("running8"), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_coefficients(p, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NumericCoefficients)->RangeMultiplier(2)->Range(16, 160)->Complexity();

void BM_RootFinding(benchmark::State& state) {
  std::vector<cdouble> coeffs;
  for (long k = 0; k <= state.range(0); ++k) coeffs.emplace_back(1.0 + 0.5 * k, 0.25 * (k % 3));
  for (auto _ : state) benchmark::DoNotOptimize(complex_roots(coeffs));
}
BENCHMARK(BM_RootFinding)->Arg(4)->Arg(16)->Arg(64);

void BM_Translate(benchmark::State& state) {
  QOperator p = fixture("cfa");
  Coeff c(QPoly::monomial(Rational(2), Rational(1, 2)));
  for (auto _ : state) benchmark::DoNotOptimize(translate(p, c, Rational(1, 2)));
}
BENCHMARK(BM_Translate);

void BM_Polygon(benchmark::State& state) {
  QOperator p = fixture("jones8");
  for (auto _ : state) benchmark::DoNotOptimize(newton_puiseux_polygon(p));
}
BENCHMARK(BM_Polygon);

}  // namespace

BENCHMARK_MAIN();
