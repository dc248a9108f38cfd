// Benchmarks for the performance-sensitive library paths.  All inputs are
// built from the family constructors so the suite needs no fixture files.

#include <benchmark/benchmark.h>

#include <leadsto/codes.hpp>
#include <leadsto/decide.hpp>
#include <leadsto/diagram.hpp>
#include <leadsto/invariants.hpp>
#include <leadsto/minors.hpp>
#include <leadsto/tait.hpp>

using namespace leadsto;

namespace {

void BM_parse_pd(benchmark::State& state) {
    const std::string text = serialize_pd(build_torus2_diagram(8));
    for (auto _ : state) benchmark::DoNotOptimize(parse_pd(text));
}
BENCHMARK(BM_parse_pd);

void BM_tait_graphs(benchmark::State& state) {
    const Diagram d = build_torus2_diagram(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tait_graphs(projection(d)));
}
BENCHMARK(BM_tait_graphs)->Arg(4)->Arg(8);

void BM_is_strong(benchmark::State& state) {
    const Diagram d = build_twist_diagram(8);
    for (auto _ : state) benchmark::DoNotOptimize(is_strong(d));
}
BENCHMARK(BM_is_strong);

void BM_kauffman_bracket(benchmark::State& state) {
    const Diagram d = build_torus2_diagram(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(BM_kauffman_bracket)->Arg(6)->Arg(8)->Arg(10);

void BM_kauffman_bracket_shared_cache(benchmark::State& state) {
    const Diagram d = build_torus2_diagram(10);
    BracketCache cache;
    for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, 16, &cache));
}
BENCHMARK(BM_kauffman_bracket_shared_cache);

void BM_signature_of(benchmark::State& state) {
    const Diagram d = build_twist_diagram(8);
    for (auto _ : state) benchmark::DoNotOptimize(signature_of(d));
}
BENCHMARK(BM_signature_of);

void BM_find_cycle_minor(benchmark::State& state) {
    const auto pair = tait_graphs(projection(build_torus2_diagram(8)));
    for (auto _ : state) benchmark::DoNotOptimize(find_cycle_minor(pair.white, 5));
}
BENCHMARK(BM_find_cycle_minor);

void BM_find_theta_minor(benchmark::State& state) {
    const auto pair = tait_graphs(projection(build_twist_diagram(8)));
    for (auto _ : state) {
        ThetaSubgraph theta;
        benchmark::DoNotOptimize(find_theta_minor(pair.gray, 6, &theta));
    }
}
BENCHMARK(BM_find_theta_minor);

void BM_oracle_census(benchmark::State& state) {
    const Diagram d = build_torus2_diagram(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_census(d));
}
BENCHMARK(BM_oracle_census)->Arg(3)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_decide_torus_structural(benchmark::State& state) {
    const Diagram d = build_torus2_diagram(8);
    for (auto _ : state) benchmark::DoNotOptimize(decide_torus(d, 4));
}
BENCHMARK(BM_decide_torus_structural);

void BM_decide_twist_structural_no(benchmark::State& state) {
    const Diagram d = build_torus2_diagram(9);
    for (auto _ : state) benchmark::DoNotOptimize(decide_twist(d, 5));
}
BENCHMARK(BM_decide_twist_structural_no);

} // namespace

BENCHMARK_MAIN();
