// Microbenchmarks for the interval -> complex -> homology pipeline and the
// series front end.  Run: frobex_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "frobex/complex.hpp"
#include "frobex/homology.hpp"
#include "frobex/interval.hpp"
#include "frobex/monoid.hpp"
#include "frobex/poincare.hpp"

namespace {

using namespace frobex;

void BM_OpenInterval(benchmark::State& state) {
  MonoidSpec spec = MonoidSpec::three_gen(2, 2, 2);
  MonoidElement lambda = normalize(spec, {1, 1, state.range(0)});
  for (auto _ : state) {
    IntervalPoset poset = open_interval(spec, lambda);
    benchmark::DoNotOptimize(poset.size());
  }
}
BENCHMARK(BM_OpenInterval)->Arg(3)->Arg(5)->Arg(7);

void BM_IntervalCore(benchmark::State& state) {
  MonoidSpec spec = MonoidSpec::three_gen(2, 2, 2);
  MonoidElement lambda = normalize(spec, {1, 1, state.range(0)});
  IntervalPoset poset = open_interval(spec, lambda);
  for (auto _ : state) {
    IntervalPoset core = poset.core();
    benchmark::DoNotOptimize(core.size());
  }
}
BENCHMARK(BM_IntervalCore)->Arg(3)->Arg(5)->Arg(7);

void BM_OrderComplex(benchmark::State& state) {
  MonoidSpec spec = MonoidSpec::two_gen(2, 2);
  MonoidElement lambda = normalize(spec, {1, state.range(0)});
  IntervalPoset poset = open_interval(spec, lambda);
  for (auto _ : state) {
    SimplicialComplex complex = order_complex(poset);
    benchmark::DoNotOptimize(complex.max_dim());
  }
}
BENCHMARK(BM_OrderComplex)->Arg(4)->Arg(6)->Arg(8);

void BM_LocalBettiGf2(benchmark::State& state) {
  MonoidSpec spec = MonoidSpec::three_gen(2, 2, 2);
  MonoidElement lambda = normalize(spec, {1, 1, state.range(0)});
  FieldSpec field = FieldSpec::gf(2);
  for (auto _ : state) {
    LocalBettiVector betti = local_betti(spec, lambda, field);
    benchmark::DoNotOptimize(betti.entries().size());
  }
}
BENCHMARK(BM_LocalBettiGf2)->Arg(3)->Arg(5)->Arg(7);

void BM_LocalBettiRational(benchmark::State& state) {
  MonoidSpec spec = MonoidSpec::three_gen(2, 2, 2);
  MonoidElement lambda = normalize(spec, {1, 1, state.range(0)});
  FieldSpec field = FieldSpec::rational();
  for (auto _ : state) {
    LocalBettiVector betti = local_betti(spec, lambda, field);
    benchmark::DoNotOptimize(betti.entries().size());
  }
}
BENCHMARK(BM_LocalBettiRational)->Arg(3)->Arg(5);

void BM_SeriesClosedForm(benchmark::State& state) {
  MonoidSpec spec = MonoidSpec::three_gen(2, 3, 3);
  int i_max = static_cast<int>(state.range(0));
  Coords box = default_series_box(spec, i_max);
  for (auto _ : state) {
    MultigradedSeries series = series_closed_form(spec, i_max, box);
    benchmark::DoNotOptimize(series.terms().size());
  }
}
BENCHMARK(BM_SeriesClosedForm)->Arg(4)->Arg(8)->Arg(16);

void BM_SeriesOracle(benchmark::State& state) {
  MonoidSpec spec = MonoidSpec::three_gen(2, 3, 3);
  int i_max = static_cast<int>(state.range(0));
  Coords box = default_series_box(spec, i_max);
  for (auto _ : state) {
    MultigradedSeries series =
        series_computed(spec, i_max, box, SeriesMode::oracle);
    benchmark::DoNotOptimize(series.terms().size());
  }
}
BENCHMARK(BM_SeriesOracle)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
