#include <benchmark/benchmark.h>

#include <bqf/carks.hpp>
#include <bqf/composition.hpp>
#include <bqf/cubes.hpp>
#include <bqf/jimm.hpp>
#include <bqf/reduction.hpp>

using namespace bqf;

namespace {

Form F(long a, long b, long c) { return Form(Int(a), Int(b), Int(c)); }

void BM_ReduceDefinite(benchmark::State& st) {
    Form f = act(Matrix(13, 8, 8, 5), F(2, 1, 3));
    for (auto _ : st) benchmark::DoNotOptimize(reduce_definite(f));
}
BENCHMARK(BM_ReduceDefinite);

void BM_GaussCycle(benchmark::State& st) {
    Form f = F(25, 111, -33);
    for (auto _ : st) benchmark::DoNotOptimize(gauss_reduce_indefinite(f));
}
BENCHMARK(BM_GaussCycle);

void BM_Compose(benchmark::State& st) {
    FormClass a = class_of(F(3, 1, 275)), b = class_of(F(5, 1, 165));
    for (auto _ : st) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose);

void BM_ClassGroup(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(class_group(-st.range(0)));
}
BENCHMARK(BM_ClassGroup)->Arg(420)->Arg(3299);

void BM_Pell(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(pell(st.range(0)));
}
BENCHMARK(BM_Pell)->Arg(61)->Arg(4729494);

void BM_CubeFromPair(benchmark::State& st) {
    Form f1 = F(25, 111, -33), f2 = F(-61, 35, 59);
    for (auto _ : st) benchmark::DoNotOptimize(cube_from_pair(f1, f2));
}
BENCHMARK(BM_CubeFromPair);

void BM_BoxScan(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(scan_triple_product_box(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_BoxScan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Cark(benchmark::State& st) {
    Form f = F(25, 111, -33);
    for (auto _ : st) benchmark::DoNotOptimize(cark_of(f));
}
BENCHMARK(BM_Cark);

void BM_Represent(benchmark::State& st) {
    Form f = F(25, 111, -33);
    Int N = st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(represent(f, N));
}
BENCHMARK(BM_Represent)->Arg(25)->Arg(1000);

void BM_Jimm(benchmark::State& st) {
    Form f = F(25, 111, -33);
    for (auto _ : st) benchmark::DoNotOptimize(jimm_class(f));
}
BENCHMARK(BM_Jimm);

}  // namespace

BENCHMARK_MAIN();
