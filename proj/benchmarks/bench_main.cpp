#include <benchmark/benchmark.h>

#include "laurexp/fixtures.hpp"
#include "laurexp/report.hpp"
#include "laurexp/series.hpp"
#include "laurexp/wordpoly.hpp"

using namespace laurexp;

static void BM_AnalyzeFixture(benchmark::State& state, const char* name) {
  const ProblemSpec spec = parse_spec(fixture(name).text);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(spec));
}
BENCHMARK_CAPTURE(BM_AnalyzeFixture, ex1, "ex1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AnalyzeFixture, ex4, "ex4")->Unit(benchmark::kMillisecond);

static void BM_FirstMismatch(benchmark::State& state) {
  const ProblemSpec spec = parse_spec(fixture("ex2").text);
  const auto F = Field::prime(spec.p);
  const UniformMorphism sigma(spec.m, spec.images);
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    SequenceStream stream(sigma, Coding::from_ints(F, spec.coding), spec.seed);
    benchmark::DoNotOptimize(first_mismatch(stream, {}, {0}, n, 1ull << 40));
  }
}
BENCHMARK(BM_FirstMismatch)->DenseRange(4, 16, 4);

static void BM_ExpandRational(benchmark::State& state) {
  const auto F = Field::prime(2);
  const RationalFunction r{Polynomial::from_ints(F, {0, 1}), Polynomial::from_ints(F, {1, 0, 0, 0, 1})};
  for (auto _ : state) benchmark::DoNotOptimize(expand_rational(r, state.range(0)));
}
BENCHMARK(BM_ExpandRational)->Range(1 << 8, 1 << 14);

static void BM_PeriodicityCertificate(benchmark::State& state) {
  const ProblemSpec spec = parse_spec(fixture("ex4").text);
  const auto F = Field::prime(spec.p);
  const UniformMorphism sigma(spec.m, spec.images);
  const Coding coding = Coding::from_ints(F, spec.coding);
  const Polynomial h = Polynomial::from_ints(F, {-1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(periodicity_certificate(sigma, coding, {0, 0, 0, 4, 3}, h));
}
BENCHMARK(BM_PeriodicityCertificate);
BENCHMARK_MAIN();
