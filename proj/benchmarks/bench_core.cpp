// bench_core.cpp — Microbenchmarks for the three hot paths: propagator
// preparation (per-sector eigendecomposition), single-time evolution, and
// full metric-record evaluation.

#include "qbsim/dynamics.hpp"
#include "qbsim/experiments.hpp"
#include "qbsim/hamiltonian.hpp"
#include "qbsim/metrics.hpp"
#include "qbsim/states.hpp"

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

using namespace qb;

namespace {

std::vector<int> cutoffs_for(int n_modes, int cutoff) {
    return std::vector<int>(static_cast<std::size_t>(n_modes), cutoff);
}

void bench_prepare_propagator(benchmark::State& state) {
    const int n_modes = static_cast<int>(state.range(0));
    const int cutoff = static_cast<int>(state.range(1));
    const auto model = hamiltonian::ModelConfig::resonant(4, cutoffs_for(n_modes, cutoff));
    const auto layout = model.layout();
    const auto h = hamiltonian::build_total_hamiltonian(model, layout);
    const auto sectors = hilbert::build_sectors(layout);
    for (auto _ : state) {
        auto prop = dynamics::prepare_propagator(h, sectors, layout);
        benchmark::DoNotOptimize(prop);
    }
    state.SetLabel(std::to_string(layout.total_dim) + " dims");
}

void bench_evolve(benchmark::State& state) {
    const int n_modes = static_cast<int>(state.range(0));
    const int cutoff = static_cast<int>(state.range(1));
    const auto model = hamiltonian::ModelConfig::resonant(4, cutoffs_for(n_modes, cutoff));
    const experiments::Engine engine(model);
    const auto spec = n_modes == 1 ? states::ChargerSpec::single(1.5)
                                   : states::ChargerSpec::semi_bell_plus(1.5);
    const auto psi0 = states::build_initial_state(engine.layout(), spec);
    const dynamics::BoundState bound(engine.propagator(), psi0);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.37;
        benchmark::DoNotOptimize(bound.at(t));
    }
    state.SetLabel(std::to_string(engine.layout().total_dim) + " dims");
}

void bench_evaluate_record(benchmark::State& state) {
    const int n_modes = static_cast<int>(state.range(0));
    const int cutoff = static_cast<int>(state.range(1));
    const auto model = hamiltonian::ModelConfig::resonant(4, cutoffs_for(n_modes, cutoff));
    const experiments::Engine engine(model);
    const auto spec = n_modes == 1 ? states::ChargerSpec::single(1.5)
                                   : states::ChargerSpec::semi_bell_plus(1.5);
    const auto psi0 = states::build_initial_state(engine.layout(), spec);
    const dynamics::BoundState bound(engine.propagator(), psi0);
    const Eigen::VectorXcd psi = bound.at(1.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            metrics::evaluate_record(psi, engine.layout(), engine.battery(), 1.3));
    }
    state.SetLabel(std::to_string(engine.layout().total_dim) + " dims");
}

}  // namespace

BENCHMARK(bench_prepare_propagator)->Args({1, 23})->Args({2, 23})->Args({2, 34})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bench_evolve)->Args({1, 23})->Args({2, 23})->Args({2, 34})
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(bench_evaluate_record)->Args({1, 23})->Args({2, 23})->Args({2, 34})
    ->Unit(benchmark::kMicrosecond);
