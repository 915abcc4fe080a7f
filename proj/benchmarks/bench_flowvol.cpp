#include "flowvol/families.hpp"
#include "flowvol/graph.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"
#include "flowvol/subdivision.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace flowvol;

void BM_kpf_complete(benchmark::State& state) {
    const int vertices = static_cast<int>(state.range(0));
    const MultiDigraph g = complete_graph(vertices);
    std::vector<long long> netflow(static_cast<std::size_t>(vertices), 1);
    netflow.back() = -(vertices - 1);
    for (auto _ : state) benchmark::DoNotOptimize(kpf(g, netflow));
}
BENCHMARK(BM_kpf_complete)->Arg(4)->Arg(5)->Arg(6);

void BM_lidskii_volume_complete(benchmark::State& state) {
    const int vertices = static_cast<int>(state.range(0));
    const MultiDigraph g = complete_graph(vertices);
    const Netflow ones(std::vector<long long>(static_cast<std::size_t>(vertices - 1), 1));
    for (auto _ : state) benchmark::DoNotOptimize(lidskii_volume(g, ones));
}
BENCHMARK(BM_lidskii_volume_complete)->Arg(4)->Arg(5);

void BM_unit_volume_sparse(benchmark::State& state) {
    // The unit netflow kills every term but one, so this exercises the lazy
    // evaluation of the Lidskii sum on a large complete graph.
    const int vertices = static_cast<int>(state.range(0));
    const MultiDigraph g = complete_graph(vertices);
    std::vector<long long> unit(static_cast<std::size_t>(vertices - 1), 0);
    unit[0] = 1;
    const Netflow a(unit);
    for (auto _ : state) benchmark::DoNotOptimize(lidskii_volume(g, a));
}
BENCHMARK(BM_unit_volume_sparse)->Arg(7)->Arg(8);

void BM_ehrhart_poly(benchmark::State& state) {
    const MultiDigraph g = pitman_stanley_graph(static_cast<int>(state.range(0)));
    const Netflow ones(std::vector<long long>(static_cast<std::size_t>(g.n()), 1));
    for (auto _ : state) benchmark::DoNotOptimize(ehrhart_poly(g, ones));
}
BENCHMARK(BM_ehrhart_poly)->Arg(3)->Arg(4);

void BM_num_cells(benchmark::State& state) {
    const MultiDigraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(num_cells(g));
}
BENCHMARK(BM_num_cells)->Arg(5)->Arg(6);

void BM_cell_type_determinant(benchmark::State& state) {
    const MultiDigraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(num_cell_types(g));
}
BENCHMARK(BM_cell_type_determinant)->Arg(6)->Arg(8);

void BM_build_brt(benchmark::State& state) {
    const MultiDigraph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_brt(g).nodes.size());
}
BENCHMARK(BM_build_brt)->Arg(4)->Arg(5);

void BM_build_ccrt(benchmark::State& state) {
    const MultiDigraph g = complete_graph(static_cast<int>(state.range(0)));
    const Netflow ones(std::vector<long long>(static_cast<std::size_t>(g.n()), 1));
    for (auto _ : state) benchmark::DoNotOptimize(build_ccrt(g, ones).nodes.size());
}
BENCHMARK(BM_build_ccrt)->Arg(4)->Arg(5);

void BM_ps_lattice_count(benchmark::State& state) {
    const std::vector<long long> a(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(ps_lattice_count(a));
}
BENCHMARK(BM_ps_lattice_count)->Arg(8)->Arg(16);

void BM_parking_functions(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(parking_functions(state.range(0)).size());
}
BENCHMARK(BM_parking_functions)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
