#include <benchmark/benchmark.h>

#include "quadrint/hilbert.hpp"
#include "quadrint/instance.hpp"
#include "quadrint/lines.hpp"
#include "quadrint/rng.hpp"
#include "quadrint/rulings.hpp"
#include "quadrint/sampling.hpp"
#include "quadrint/secants.hpp"

using namespace quadrint;

namespace {

Matrix random_matrix(const PrimeField& f, Rng& rng, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.element(f);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const PrimeField f(32003);
  Rng rng(1);
  const Matrix m = random_matrix(f, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(5)->Arg(15)->Arg(60);

void BM_Determinant(benchmark::State& state) {
  const PrimeField f(32003);
  Rng rng(2);
  const Matrix m = random_matrix(f, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(5)->Arg(15);

void BM_QuinticMinors(benchmark::State& state) {
  const Instance inst = gen_instance(1, PrimeField(32003));
  const PolyMatrix n = inst.N_symbolic();
  for (auto _ : state) benchmark::DoNotOptimize(minors(n, 5));
}
BENCHMARK(BM_QuinticMinors)->Unit(benchmark::kMillisecond);

void BM_PlaneSectionHilbert(benchmark::State& state) {
  const Instance inst = gen_instance(1, PrimeField(32003));
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(plane_section_profile(inst, rng));
}
BENCHMARK(BM_PlaneSectionHilbert)->Unit(benchmark::kMillisecond);

void BM_Rank3LocusHilbert(benchmark::State& state) {
  const Instance inst = gen_instance(1, PrimeField(32003));
  for (auto _ : state) benchmark::DoNotOptimize(rank3_locus_profile(inst, 4, 8));
}
BENCHMARK(BM_Rank3LocusHilbert)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_PlanesOn(benchmark::State& state) {
  const PrimeField f(static_cast<std::uint64_t>(state.range(0)));
  const auto q = QuadricForm::from_terms(f, 5, {{0, 1, 1}, {2, 3, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(planes_on(q));
}
BENCHMARK(BM_PlanesOn)->Arg(7)->Arg(101)->Unit(benchmark::kMicrosecond);

void BM_ClassifyCommonPlane(benchmark::State& state) {
  const PrimeField f(static_cast<std::uint64_t>(state.range(0)));
  Rng rng(4);
  const Pencil p = random_conjugate(family1_normal_form(f), rng);
  for (auto _ : state) benchmark::DoNotOptimize(classify_line(p));
}
BENCHMARK(BM_ClassifyCommonPlane)->Arg(101)->Arg(32003)->Unit(benchmark::kMicrosecond);

void BM_SamplePoints(benchmark::State& state) {
  const Instance inst = gen_instance(1, PrimeField(static_cast<std::uint64_t>(state.range(0))));
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(sample_S_points(inst, 5, rng));
}
BENCHMARK(BM_SamplePoints)->Arg(101)->Arg(32003)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
