// experiments.cpp — Series evaluation, refined extrema, sweeps, and scaling.

#include "qbsim/experiments.hpp"

#include "qbsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qb::experiments {

namespace {

constexpr int kMaxSweepCutoff = 200;
constexpr int kMaxScalingQubits = 6;

// Golden-section maximization of f on [a, b] down to width rel_tol*max(1,b).
std::pair<double, double> golden_max(const std::function<double(double)>& f, double a,
                                     double b, double rel_tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    const double width_tol = rel_tol * std::max(1.0, std::abs(b));
    while (b - a > width_tol) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 >= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

Extremum refine(const PreparedScenario& prepared,
                const std::vector<metrics::MetricsRecord>& series, Metric metric,
                double rel_tol, double sign) {
    if (series.empty())
        throw std::invalid_argument("max_over_time: empty series");
    std::size_t best = 0;
    for (std::size_t k = 1; k < series.size(); ++k)
        if (sign * metric_value(series[k], metric) >
            sign * metric_value(series[best], metric))
            best = k;

    Extremum out;
    out.t = series[best].t;
    out.value = metric_value(series[best], metric);
    out.at_right_edge = best + 1 == series.size();
    if (series.size() < 2) return out;

    const double a = series[best == 0 ? 0 : best - 1].t;
    const double b = series[std::min(best + 1, series.size() - 1)].t;
    if (!(b > a)) return out;
    auto f = [&](double t) { return sign * metric_value(prepared.at(t), metric); };
    auto [t_star, v_star] = golden_max(f, a, b, rel_tol);
    if (v_star > sign * out.value) {
        out.t = t_star;
        out.value = sign * v_star;
    }
    return out;
}

struct KindMaxima {
    double p_max, t_p, e_max, t_e;
};

KindMaxima refined_maxima(const Engine& engine, const states::ChargerSpec& charger,
                          const dynamics::TimeGrid& grid) {
    PreparedScenario prepared(engine, charger);
    std::vector<metrics::MetricsRecord> series = prepared.over(grid);
    Extremum p = max_over_time(prepared, series, Metric::power);
    Extremum e = max_over_time(prepared, series, Metric::ergotropy);
    return {p.value, p.t, e.value, e.t};
}

void check_cutoffs(const std::vector<int>& cutoffs) {
    for (int c : cutoffs)
        if (c > kMaxSweepCutoff)
            throw ResourceLimitError("per-mode cutoff " + std::to_string(c) +
                                     " exceeds the sweep guard " +
                                     std::to_string(kMaxSweepCutoff));
}

hamiltonian::ModelConfig with_cutoffs(const hamiltonian::ModelConfig& base,
                                      std::vector<int> cutoffs) {
    hamiltonian::ModelConfig config = base;
    config.omega_mode.assign(cutoffs.size(), base.omega0);
    config.mode_cutoffs = std::move(cutoffs);
    return config;
}

} // namespace

Engine::Engine(hamiltonian::ModelConfig model)
    : model_(std::move(model)),
      layout_(model_.layout()),
      h_(hamiltonian::build_total_hamiltonian(model_, layout_)),
      battery_(metrics::BatteryReference::make(model_.n_qubits, model_.omega0)),
      propagator_(dynamics::prepare_propagator(h_, hilbert::build_sectors(layout_),
                                               layout_)) {}

PreparedScenario::PreparedScenario(const Engine& engine,
                                   const states::ChargerSpec& charger,
                                   double deficit_tol)
    : engine_(&engine),
      psi0_([&] {
          states::ChargerState state = states::build_charger_state(
              charger, engine.layout().mode_cutoffs, deficit_tol);
          return states::build_initial_state(engine.layout(), state);
      }()),
      bound_(engine.propagator(), psi0_),
      mean_photons_(0.0),
      deficit_(0.0) {
    states::ChargerState state =
        states::build_charger_state(charger, engine.layout().mode_cutoffs, deficit_tol);
    mean_photons_ = states::mean_photon_number(state);
    deficit_ = state.truncation_deficit;
}

metrics::MetricsRecord PreparedScenario::at(double t) const {
    return metrics::evaluate_record(bound_.at(t), engine_->layout(), engine_->battery(),
                                    t);
}

std::vector<metrics::MetricsRecord> PreparedScenario::over(
    const dynamics::TimeGrid& grid) const {
    grid.validate();
    std::vector<metrics::MetricsRecord> records(grid.t_values.size());
    bound_.for_each_time(grid.t_values,
                         [&](std::size_t k, const Eigen::VectorXcd& psi) {
                             records[k] = metrics::evaluate_record(
                                 psi, engine_->layout(), engine_->battery(),
                                 grid.t_values[k]);
                         });
    return records;
}

MetricsSeries run_time_series(const Scenario& scenario) {
    Engine engine(scenario.model);
    PreparedScenario prepared(engine, scenario.charger);
    MetricsSeries series;
    series.scenario = scenario;
    if (series.scenario.label.empty())
        series.scenario.label = states::charger_kind_name(scenario.charger.kind);
    series.records = prepared.over(scenario.grid);
    if (scenario.normalize_per_cell)
        for (metrics::MetricsRecord& r : series.records)
            r = normalize_per_cell(r, scenario.model.n_qubits, scenario.model.omega0);
    return series;
}

metrics::MetricsRecord normalize_per_cell(const metrics::MetricsRecord& record,
                                          int n_qubits, double omega0) {
    const double cell_energy = n_qubits * omega0;
    metrics::MetricsRecord r = record;
    r.energy /= cell_energy;
    r.ergotropy /= cell_energy;
    r.power /= cell_energy * omega0;
    r.entropy /= n_qubits;
    r.mutual_info /= n_qubits;
    r.charger_entropy /= n_qubits;
    return r;
}

double metric_value(const metrics::MetricsRecord& record, Metric metric) {
    switch (metric) {
    case Metric::energy: return record.energy;
    case Metric::ergotropy: return record.ergotropy;
    case Metric::power: return record.power;
    case Metric::gamma: return record.gamma;
    case Metric::purity: return record.purity;
    case Metric::entropy: return record.entropy;
    case Metric::mutual_info: return record.mutual_info;
    case Metric::consonance: return record.consonance;
    case Metric::charger_entropy: return record.charger_entropy;
    }
    throw std::logic_error("metric_value: unhandled metric");
}

Extremum max_over_time(const PreparedScenario& prepared,
                       const std::vector<metrics::MetricsRecord>& series,
                       Metric metric, double rel_tol) {
    return refine(prepared, series, metric, rel_tol, 1.0);
}

Extremum min_over_time(const PreparedScenario& prepared,
                       const std::vector<metrics::MetricsRecord>& series,
                       Metric metric, double rel_tol) {
    return refine(prepared, series, metric, rel_tol, -1.0);
}

states::ChargerSpec budget_paired_single(const states::ChargerSpec& pair) {
    if (pair.kind != states::ChargerKind::product_pair)
        throw std::invalid_argument("budget_paired_single: expects a product pair");
    double amp = std::sqrt(std::norm(pair.alpha1) + std::norm(pair.alpha2));
    return states::ChargerSpec::single(amp);
}

SweepResult alpha_sweep(const hamiltonian::ModelConfig& base,
                        const std::vector<double>& alphas,
                        const dynamics::TimeGrid& grid) {
    grid.validate();
    for (double a : alphas)
        if (!(a > 0.0))
            throw std::invalid_argument("alpha_sweep: amplitudes must be positive");

    SweepResult result;
    result.rows.reserve(alphas.size());
    for (double alpha : alphas) {
        states::ChargerSpec pair = states::ChargerSpec::product_pair(alpha, -alpha);
        states::ChargerSpec single = budget_paired_single(pair);

        std::vector<int> pair_cutoffs = states::default_cutoffs(pair);
        std::vector<int> single_cutoffs = states::default_cutoffs(single);
        check_cutoffs(pair_cutoffs);
        check_cutoffs(single_cutoffs);

        Engine pair_engine(with_cutoffs(base, pair_cutoffs));
        Engine single_engine(with_cutoffs(base, single_cutoffs));

        PreparedScenario pair_prepared(pair_engine, pair);
        PreparedScenario single_prepared(single_engine, single);
        double budget_gap = std::abs(pair_prepared.initial_mean_photons() -
                                     single_prepared.initial_mean_photons());
        if (budget_gap > 1e-8)
            throw InvariantViolation("alpha_sweep: photon budgets differ by " +
                                     std::to_string(budget_gap) + " at alpha = " +
                                     std::to_string(alpha));

        KindMaxima pair_max = refined_maxima(pair_engine, pair, grid);
        KindMaxima single_max = refined_maxima(single_engine, single, grid);

        SweepRow row;
        row.alpha = alpha;
        row.p_max_single = single_max.p_max;
        row.t_p_single = single_max.t_p;
        row.e_max_single = single_max.e_max;
        row.t_e_single = single_max.t_e;
        row.p_max_pair = pair_max.p_max;
        row.t_p_pair = pair_max.t_p;
        row.e_max_pair = pair_max.e_max;
        row.t_e_pair = pair_max.t_e;
        row.delta_p = pair_max.p_max - single_max.p_max;
        row.delta_e = pair_max.e_max - single_max.e_max;
        result.rows.push_back(row);
    }
    return result;
}

std::vector<ScalingRow> size_scaling(const std::vector<int>& n_qubits_list,
                                     double alpha,
                                     const hamiltonian::ModelConfig& base,
                                     const dynamics::TimeGrid& grid) {
    grid.validate();
    for (int n : n_qubits_list)
        if (n < 1 || n > kMaxScalingQubits)
            throw ResourceLimitError("size_scaling: n_qubits " + std::to_string(n) +
                                     " outside [1, " +
                                     std::to_string(kMaxScalingQubits) + "]");

    states::ChargerSpec pair = states::ChargerSpec::product_pair(alpha, -alpha);
    states::ChargerSpec single = budget_paired_single(pair);
    states::ChargerSpec correlated = states::ChargerSpec::semi_bell_plus(alpha);
    std::vector<int> pair_cutoffs = states::default_cutoffs(pair);
    std::vector<int> single_cutoffs = states::default_cutoffs(single);
    check_cutoffs(pair_cutoffs);
    check_cutoffs(single_cutoffs);

    std::vector<ScalingRow> rows;
    rows.reserve(n_qubits_list.size());
    for (int n : n_qubits_list) {
        hamiltonian::ModelConfig pair_model = with_cutoffs(base, pair_cutoffs);
        pair_model.n_qubits = n;
        hamiltonian::ModelConfig single_model = with_cutoffs(base, single_cutoffs);
        single_model.n_qubits = n;

        Engine pair_engine(pair_model);
        Engine single_engine(single_model);

        ScalingRow row;
        row.n_qubits = n;
        KindMaxima s = refined_maxima(single_engine, single, grid);
        KindMaxima p = refined_maxima(pair_engine, pair, grid);
        KindMaxima c = refined_maxima(pair_engine, correlated, grid);
        row.p_max_single = s.p_max;
        row.e_max_single = s.e_max;
        row.p_max_pair = p.p_max;
        row.e_max_pair = p.e_max;
        row.p_max_correlated = c.p_max;
        row.e_max_correlated = c.e_max;
        rows.push_back(row);
    }
    return rows;
}

} // namespace qb::experiments
