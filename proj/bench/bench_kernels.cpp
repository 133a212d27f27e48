// Serial versus OpenMP kernels on the lift of the q = 4 monomial set (n = 1182, k = 6).

#include <benchmark/benchmark.h>

#include "mincode/constructions.hpp"
#include "mincode/kernels.hpp"

namespace {

using namespace mincode;

struct Workload {
    Field field = Field::of_order(4);
    std::vector<GFVector> messages;
    std::vector<GFVector> points;
    kernels::VectorBlock message_block{6};
    kernels::VectorBlock column_block{6};
    kernels::VectorBlock point_block{6};
    kernels::SupportTable table;

    Workload() {
        const auto D = monomial_zero_set(field, 5, 3);
        const auto lifted = lift(D, D).set;
        messages = projective_points(field, 6);
        points = project_multiset(lifted).distinct();
        message_block = kernels::VectorBlock(messages, 6);
        column_block = kernels::VectorBlock(lifted.expanded(), 6);
        point_block = kernels::VectorBlock(points, 6);
        table = kernels::serial::supports(field, message_block, column_block);
    }
};

const Workload& workload() {
    static const Workload w;
    return w;
}

template <bool Parallel>
void BM_Weights(benchmark::State& state) {
    const auto& w = workload();
    for (auto _ : state) {
        auto r = Parallel ? kernels::parallel::weights(w.field, w.message_block, w.column_block)
                          : kernels::serial::weights(w.field, w.message_block, w.column_block);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_Supports(benchmark::State& state) {
    const auto& w = workload();
    for (auto _ : state) {
        auto r = Parallel ? kernels::parallel::supports(w.field, w.message_block, w.column_block)
                          : kernels::serial::supports(w.field, w.message_block, w.column_block);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_ContainedPair(benchmark::State& state) {
    const auto& w = workload();
    for (auto _ : state) {
        auto r = Parallel ? kernels::parallel::first_contained_pair(w.table)
                          : kernels::serial::first_contained_pair(w.table);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_DeficientHyperplane(benchmark::State& state) {
    const auto& w = workload();
    for (auto _ : state) {
        auto r = Parallel ? kernels::parallel::first_deficient_hyperplane(w.field, w.message_block, w.point_block, 5)
                          : kernels::serial::first_deficient_hyperplane(w.field, w.message_block, w.point_block, 5);
        benchmark::DoNotOptimize(r);
    }
}

BENCHMARK(BM_Weights<false>)->Name("weights/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Weights<true>)->Name("weights/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Supports<false>)->Name("supports/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Supports<true>)->Name("supports/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContainedPair<false>)->Name("contained_pair/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContainedPair<true>)->Name("contained_pair/parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeficientHyperplane<false>)->Name("deficient_hyperplane/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeficientHyperplane<true>)->Name("deficient_hyperplane/parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
