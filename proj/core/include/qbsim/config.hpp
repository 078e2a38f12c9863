// config.hpp — Plain-text run configuration: sectioned key/value documents
// with scalars and comma lists, validated into a fully resolved RunConfig.

#pragma once

#include "qbsim/dynamics.hpp"
#include "qbsim/hamiltonian.hpp"
#include "qbsim/states.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qb::config {

enum class ExperimentKind { series, sweep, scaling };

std::string experiment_name(ExperimentKind kind);

struct RunConfig {
    ExperimentKind experiment = ExperimentKind::series;

    // [model]
    double omega0 = 1.0;
    double g = 2.0;                  // defaults to 2 * omega0 when omitted
    int n_qubits = 4;
    std::vector<int> cutoffs;        // empty: per-mode default rule
    std::vector<double> omega_mode;  // empty: resonant

    // [charger]
    bool kind_set = false;
    states::ChargerKind kind = states::ChargerKind::single;
    std::complex<double> alpha{2.5, 0.0};
    bool alpha2_set = false;
    std::complex<double> alpha2{0.0, 0.0};

    // [grid]
    double t_max = 10.0;
    std::size_t grid_points = 1001;

    // [sweep]
    double alpha_min = 0.1;
    double alpha_max = 3.0;
    double alpha_step = 0.1;

    // [scaling]
    std::vector<int> n_qubits_list{1, 2, 3, 4};

    // [output]
    std::string out_dir = "out";
    bool normalize = true;
    bool plots = true;
};

// Parses and validates; throws ConfigError with a 1-based line anchor on
// unknown keys, bad values, or missing required fields.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Resolved pieces for dispatch. charger_spec/model_config apply the charger
// defaults (a product pair with alpha2 omitted uses the opposed-sign pair
// (alpha, -alpha); cutoffs come from the default rule).
states::ChargerSpec charger_spec(const RunConfig& run);
hamiltonian::ModelConfig model_config(const RunConfig& run);
dynamics::TimeGrid time_grid(const RunConfig& run);
std::vector<double> sweep_alphas(const RunConfig& run);

} // namespace qb::config
