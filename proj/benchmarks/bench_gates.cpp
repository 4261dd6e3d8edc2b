#include <benchmark/benchmark.h>

#include <numbers>

#include "qsdist/circuit.hpp"
#include "qsdist/models.hpp"
#include "qsdist/protocols.hpp"
#include "qsdist/sampling.hpp"

namespace {

using namespace qsdist;

constexpr double pi = std::numbers::pi;

void BM_OneQubitGate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector sv = zero_state(n);
    const GateOp op = GateOp::u(0.3, 0.7, 1.1, n / 2);
    for (auto _ : state) {
        sv = apply(std::move(sv), op);
        benchmark::DoNotOptimize(sv.amplitudes.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(sv.amplitudes.size()));
}
BENCHMARK(BM_OneQubitGate)->Arg(10)->Arg(16)->Arg(20);

void BM_Cnot(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector sv = zero_state(n);
    const GateOp op = GateOp::cnot(0, n - 1);
    for (auto _ : state) {
        sv = apply(std::move(sv), op);
        benchmark::DoNotOptimize(sv.amplitudes.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(sv.amplitudes.size()));
}
BENCHMARK(BM_Cnot)->Arg(10)->Arg(16)->Arg(20);

void BM_SampleCounts(benchmark::State& state) {
    const StateVector sv = run(cat_state_circuit(5));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const MeasurementCounts counts = sample_counts(sv, 1024, seed++);
        benchmark::DoNotOptimize(counts.counts.size());
    }
}
BENCHMARK(BM_SampleCounts);

void BM_IsingOverlapPoint(benchmark::State& state) {
    IsingParams ip;
    ip.chi = 1.7;
    ip.theta = pi / 4;
    const Circuit prep = factorized_state_circuit(5, ip.theta, 0.0);
    const Circuit evolved = ising_evolution_circuit(ip);
    for (auto _ : state) {
        benchmark::DoNotOptimize(overlap(prep, evolved, 0, 0).value);
    }
}
BENCHMARK(BM_IsingOverlapPoint);

}  // namespace

BENCHMARK_MAIN();
