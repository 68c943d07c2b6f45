#include <benchmark/benchmark.h>

#include <string>

#include "lch/charalg.hpp"
#include "lch/diagram.hpp"
#include "lch/kauffman.hpp"
#include "lch/reps.hpp"
#include "lch/spin.hpp"

using namespace lch;

namespace {

std::string fixture(const std::string& name) { return std::string(LCH_FIXTURE_DIR) + "/" + name; }

void BM_CompletePartial(benchmark::State& st) {
    auto d = load_dga(fixture("m10_132_partial.dga"));
    auto rels = d.relations();
    for (auto _ : st) benchmark::DoNotOptimize(complete(rels, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_CompletePartial)->Arg(6)->Arg(8);

void BM_DisksT2k(benchmark::State& st) {
    auto d = t2k_diagram(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(dga_from_diagram(d));
}
BENCHMARK(BM_DisksT2k)->DenseRange(1, 7, 2);

void BM_Augmentations(benchmark::State& st) {
    auto d = dga_from_diagram(t2k_diagram(static_cast<int>(st.range(0))));
    for (auto _ : st) benchmark::DoNotOptimize(find_augmentations(d, false));
}
BENCHMARK(BM_Augmentations)->DenseRange(1, 5, 2);

void BM_MatrixReps(benchmark::State& st) {
    auto d = load_dga(fixture("trefoil.dga"));
    for (auto _ : st) benchmark::DoNotOptimize(find_matrix_reps(d, static_cast<int>(st.range(0)), false));
}
BENCHMARK(BM_MatrixReps)->Arg(1)->Arg(2);

void BM_KauffmanTorus34(benchmark::State& st) {
    auto pd = load_pd(fixture("torus_3_m4.pd"));
    for (auto _ : st) benchmark::DoNotOptimize(kauffman_poly(pd));
}
BENCHMARK(BM_KauffmanTorus34);

void BM_SpunRetraction(benchmark::State& st) {
    auto t = load_dga(fixture("trefoil.dga"));
    for (auto _ : st) benchmark::DoNotOptimize(verify_retraction(retraction(minimal_model(t, static_cast<int>(st.range(0))))));
}
BENCHMARK(BM_SpunRetraction)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
