// cli.cpp — Subcommand dispatch, output writing, and exit-code mapping.

#include "qbsim/cli.hpp"

#include "qbsim/config.hpp"
#include "qbsim/errors.hpp"
#include "qbsim/experiments.hpp"
#include "qbsim/report.hpp"
#include "qbsim/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace qb::cli {
namespace {

namespace fs = std::filesystem;

struct CliOptions {
    std::string config_path;
    std::string out_override;
    bool no_plots = false;
};

std::string command_line(int argc, const char* const* argv) {
    std::ostringstream out;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) out << ' ';
        out << argv[i];
    }
    return out.str();
}

struct MetricColumn {
    experiments::Metric metric;
    const char* name;
};

constexpr MetricColumn kColumns[] = {
    {experiments::Metric::energy, "energy"},
    {experiments::Metric::ergotropy, "ergotropy"},
    {experiments::Metric::power, "power"},
    {experiments::Metric::gamma, "gamma"},
    {experiments::Metric::purity, "purity"},
    {experiments::Metric::entropy, "entropy"},
    {experiments::Metric::mutual_info, "mutual_info"},
    {experiments::Metric::consonance, "consonance"},
    {experiments::Metric::charger_entropy, "charger_entropy"},
};

std::string metric_axis_label(const MetricColumn& column, bool normalized) {
    if (!normalized) return column.name;
    switch (column.metric) {
    case experiments::Metric::energy:
    case experiments::Metric::ergotropy:
        return std::string(column.name) + " / (N w0)";
    case experiments::Metric::power:
        return std::string(column.name) + " / (N w0^2)";
    case experiments::Metric::entropy:
    case experiments::Metric::mutual_info:
    case experiments::Metric::charger_entropy:
        return std::string(column.name) + " / N";
    default:
        return column.name;
    }
}

config::RunConfig load_run(const CliOptions& opts, config::ExperimentKind want) {
    config::RunConfig run = config::load_config_file(opts.config_path);
    if (run.experiment != want)
        throw ConfigError("config selects experiment '" +
                              config::experiment_name(run.experiment) +
                              "' but the '" + config::experiment_name(want) +
                              "' subcommand was invoked",
                          0);
    if (!opts.out_override.empty()) run.out_dir = opts.out_override;
    if (opts.no_plots) run.plots = false;
    return run;
}

void run_series(const CliOptions& opts, const std::string& command) {
    const config::RunConfig run = load_run(opts, config::ExperimentKind::series);
    const hamiltonian::ModelConfig model = config::model_config(run);
    const states::ChargerSpec charger = config::charger_spec(run);

    experiments::Scenario scenario;
    scenario.model = model;
    scenario.charger = charger;
    scenario.grid = config::time_grid(run);
    scenario.normalize_per_cell = run.normalize;
    scenario.label = states::charger_kind_name(charger.kind);
    const experiments::MetricsSeries series = experiments::run_time_series(scenario);

    const states::ChargerState charger_state = states::build_charger_state(
        charger, model.mode_cutoffs);

    fs::create_directories(run.out_dir);
    const fs::path out(run.out_dir);
    report::write_series_csv((out / "series.csv").string(), series.records);

    report::RunMetadata meta;
    meta.run = run;
    meta.resolved_cutoffs = model.mode_cutoffs;
    meta.truncation_deficit = charger_state.truncation_deficit;
    meta.command = command;
    report::write_metadata((out / "run_meta.json").string(), meta);

    if (run.plots) {
        std::vector<double> axis(series.records.size());
        for (std::size_t i = 0; i < series.records.size(); ++i)
            axis[i] = model.omega0 * series.records[i].t;
        for (const MetricColumn& column : kColumns) {
            svg::Series line;
            line.name = column.name;
            line.x = axis;
            line.y.resize(series.records.size());
            for (std::size_t i = 0; i < series.records.size(); ++i)
                line.y[i] = experiments::metric_value(series.records[i], column.metric);
            svg::write_line_chart(
                (out / (std::string(column.name) + ".svg")).string(),
                std::string(column.name) + " vs time (" + scenario.label + ")",
                "w0 t", metric_axis_label(column, run.normalize), {line});
        }
    }
}

void run_sweep(const CliOptions& opts, const std::string& command) {
    const config::RunConfig run = load_run(opts, config::ExperimentKind::sweep);
    const hamiltonian::ModelConfig base = config::model_config(run);
    const std::vector<double> alphas = config::sweep_alphas(run);
    const experiments::SweepResult result =
        experiments::alpha_sweep(base, alphas, config::time_grid(run));

    fs::create_directories(run.out_dir);
    const fs::path out(run.out_dir);
    report::write_sweep_csv((out / "sweep.csv").string(), result);

    report::RunMetadata meta;
    meta.run = run;
    meta.command = command;
    report::write_metadata((out / "run_meta.json").string(), meta);

    if (run.plots) {
        const std::size_t n = result.rows.size();
        std::vector<double> alpha_axis(n);
        svg::Series dp{"delta P_max", {}, {}}, de{"delta E_max", {}, {}};
        svg::Series ps{"single", {}, {}}, pp{"double", {}, {}};
        svg::Series es{"single", {}, {}}, ep{"double", {}, {}};
        for (std::size_t i = 0; i < n; ++i) {
            const experiments::SweepRow& row = result.rows[i];
            alpha_axis[i] = row.alpha;
            dp.y.push_back(row.delta_p);
            de.y.push_back(row.delta_e);
            ps.y.push_back(row.p_max_single);
            pp.y.push_back(row.p_max_pair);
            es.y.push_back(row.e_max_single);
            ep.y.push_back(row.e_max_pair);
        }
        dp.x = de.x = ps.x = pp.x = es.x = ep.x = alpha_axis;
        svg::write_line_chart((out / "sweep_delta.svg").string(),
                              "double-charger advantage vs amplitude", "alpha",
                              "delta (double - single)", {dp, de});
        svg::write_line_chart((out / "sweep_p_max.svg").string(),
                              "peak charging power vs amplitude", "alpha", "P_max",
                              {ps, pp});
        svg::write_line_chart((out / "sweep_e_max.svg").string(),
                              "peak ergotropy vs amplitude", "alpha", "E_max",
                              {es, ep});
    }
}

void run_scaling(const CliOptions& opts, const std::string& command) {
    const config::RunConfig run = load_run(opts, config::ExperimentKind::scaling);
    const hamiltonian::ModelConfig base = config::model_config(run);
    const std::vector<experiments::ScalingRow> rows = experiments::size_scaling(
        run.n_qubits_list, std::abs(run.alpha), base, config::time_grid(run));

    fs::create_directories(run.out_dir);
    const fs::path out(run.out_dir);
    report::write_scaling_csv((out / "scaling.csv").string(), rows);

    report::RunMetadata meta;
    meta.run = run;
    meta.command = command;
    report::write_metadata((out / "run_meta.json").string(), meta);

    if (run.plots) {
        std::vector<double> n_axis(rows.size());
        svg::Series ps{"single", {}, {}}, pp{"product pair", {}, {}},
            pc{"entangled pair", {}, {}};
        svg::Series es{"single", {}, {}}, ep{"product pair", {}, {}},
            ec{"entangled pair", {}, {}};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            n_axis[i] = rows[i].n_qubits;
            ps.y.push_back(rows[i].p_max_single);
            pp.y.push_back(rows[i].p_max_pair);
            pc.y.push_back(rows[i].p_max_correlated);
            es.y.push_back(rows[i].e_max_single);
            ep.y.push_back(rows[i].e_max_pair);
            ec.y.push_back(rows[i].e_max_correlated);
        }
        ps.x = pp.x = pc.x = es.x = ep.x = ec.x = n_axis;
        svg::write_line_chart((out / "scaling_p_max.svg").string(),
                              "peak charging power vs battery size", "N", "P_max",
                              {ps, pp, pc});
        svg::write_line_chart((out / "scaling_e_max.svg").string(),
                              "peak ergotropy vs battery size", "N", "E_max",
                              {es, ep, ec});
    }
}

} // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"quantum-battery charging simulator"};
    app.set_version_flag("--version", std::string(QBSIM_VERSION));
    app.require_subcommand(1);

    CliOptions opts;
    CLI::App* series = app.add_subcommand("series", "metric time series for one charger");
    CLI::App* sweep = app.add_subcommand("sweep", "budget-paired amplitude sweep");
    CLI::App* scaling = app.add_subcommand("scaling", "maxima versus battery size");
    for (CLI::App* sub : {series, sweep, scaling}) {
        sub->add_option("-c,--config", opts.config_path, "run configuration file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("-o,--out", opts.out_override,
                        "output directory (overrides the config)");
        sub->add_flag("--no-plots", opts.no_plots, "skip SVG chart output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = command_line(argc, argv);
    try {
        if (series->parsed()) run_series(opts, command);
        else if (sweep->parsed()) run_sweep(opts, command);
        else run_scaling(opts, command);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "truncation guard: " << e.what() << '\n';
        return 4;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return 4;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace qb::cli
