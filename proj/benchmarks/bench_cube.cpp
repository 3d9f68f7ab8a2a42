#include <benchmark/benchmark.h>

#include <string>

#include "annkh/check.hpp"
#include "annkh/homology.hpp"
#include "annkh/invariants.hpp"
#include "annkh/khcomplex.hpp"
#include "annkh/tangle.hpp"

namespace {

std::string sigma1_power(int n) {
    std::string s = "m=2\nclosure=annular\n";
    for (int i = 0; i < n; ++i) s += "slice: x+@1\n";
    return s;
}

void BM_BuildComplex(benchmark::State& state) {
    annkh::TangleDiagram d = annkh::parse_diagram(sigma1_power(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto c = annkh::build_complex(d);
        benchmark::DoNotOptimize(c.total_generators());
    }
}
BENCHMARK(BM_BuildComplex)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_StateSum(benchmark::State& state) {
    annkh::TangleDiagram d = annkh::parse_diagram(sigma1_power(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto p = annkh::sj_statesum(d);
        benchmark::DoNotOptimize(p.term_count());
    }
}
BENCHMARK(BM_StateSum)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void BM_SpectralPages(benchmark::State& state) {
    annkh::TangleDiagram d = annkh::parse_diagram(sigma1_power(static_cast<int>(state.range(0))));
    auto c = annkh::build_complex(d);
    for (auto _ : state) {
        auto pages = annkh::spectral_pages(c);
        benchmark::DoNotOptimize(pages.size());
    }
}
BENCHMARK(BM_SpectralPages)->Arg(4)->Arg(6)->Arg(8);

void BM_FullCheck(benchmark::State& state) {
    annkh::TangleDiagram d = annkh::parse_diagram(sigma1_power(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto results = annkh::run_full_check(d);
        benchmark::DoNotOptimize(results.size());
    }
}
BENCHMARK(BM_FullCheck)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
