// report.cpp — CSV round-trip I/O and the JSON sidecar.

#include "qbsim/report.hpp"

#include "qbsim/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef QBSIM_VERSION
#define QBSIM_VERSION "0.0.0"
#endif

namespace qb::report {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_row(const std::string& line, std::size_t expect, int lineno) {
    std::vector<double> values;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const char* begin = cell.c_str();
        char* end = nullptr;
        values.push_back(std::strtod(begin, &end));
        if (end == begin)
            throw std::runtime_error("bad CSV cell '" + cell + "' at line " +
                                     std::to_string(lineno));
    }
    if (values.size() != expect)
        throw std::runtime_error("expected " + std::to_string(expect) +
                                 " CSV columns at line " + std::to_string(lineno));
    return values;
}

} // namespace

void write_series_csv(const std::string& path,
                      const std::vector<metrics::MetricsRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << kSeriesHeader << "\n";
    for (const metrics::MetricsRecord& r : records)
        out << num(r.t) << ',' << num(r.energy) << ',' << num(r.ergotropy) << ','
            << num(r.power) << ',' << num(r.gamma) << ',' << num(r.purity) << ','
            << num(r.entropy) << ',' << num(r.mutual_info) << ',' << num(r.consonance)
            << ',' << num(r.charger_entropy) << "\n";
}

std::vector<metrics::MetricsRecord> read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::string line;
    if (!std::getline(in, line) || line != kSeriesHeader)
        throw std::runtime_error("unexpected CSV header in " + path);
    std::vector<metrics::MetricsRecord> records;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<double> v = parse_row(line, 10, lineno);
        metrics::MetricsRecord r;
        r.t = v[0];
        r.energy = v[1];
        r.ergotropy = v[2];
        r.power = v[3];
        r.gamma = v[4];
        r.purity = v[5];
        r.entropy = v[6];
        r.mutual_info = v[7];
        r.consonance = v[8];
        r.charger_entropy = v[9];
        records.push_back(r);
    }
    return records;
}

void write_sweep_csv(const std::string& path, const experiments::SweepResult& result) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "alpha,p_max_single,t_p_single,e_max_single,t_e_single,"
           "p_max_pair,t_p_pair,e_max_pair,t_e_pair,delta_p,delta_e\n";
    for (const experiments::SweepRow& r : result.rows)
        out << num(r.alpha) << ',' << num(r.p_max_single) << ',' << num(r.t_p_single)
            << ',' << num(r.e_max_single) << ',' << num(r.t_e_single) << ','
            << num(r.p_max_pair) << ',' << num(r.t_p_pair) << ',' << num(r.e_max_pair)
            << ',' << num(r.t_e_pair) << ',' << num(r.delta_p) << ','
            << num(r.delta_e) << "\n";
}

void write_scaling_csv(const std::string& path,
                       const std::vector<experiments::ScalingRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "n_qubits,p_max_single,e_max_single,p_max_pair,e_max_pair,"
           "p_max_correlated,e_max_correlated\n";
    for (const experiments::ScalingRow& r : rows)
        out << r.n_qubits << ',' << num(r.p_max_single) << ',' << num(r.e_max_single)
            << ',' << num(r.p_max_pair) << ',' << num(r.e_max_pair) << ','
            << num(r.p_max_correlated) << ',' << num(r.e_max_correlated) << "\n";
}

void write_metadata(const std::string& path, const RunMetadata& meta) {
    nlohmann::json j;
    j["tool"] = "qb";
    j["version"] = QBSIM_VERSION;
    j["command"] = meta.command;
    j["experiment"] = config::experiment_name(meta.run.experiment);

    nlohmann::json model;
    model["omega0"] = meta.run.omega0;
    model["g"] = meta.run.g;
    model["n_qubits"] = meta.run.n_qubits;
    model["mode_cutoffs"] = meta.resolved_cutoffs;
    if (!meta.run.omega_mode.empty()) model["omega_mode"] = meta.run.omega_mode;
    else model["omega_mode_note"] = "resonant, omega_mode[j] = omega0";
    j["model"] = model;

    nlohmann::json charger;
    if (meta.run.kind_set || meta.run.experiment == config::ExperimentKind::series)
        charger["kind"] = states::charger_kind_name(meta.run.kind);
    charger["alpha"] = {meta.run.alpha.real(), meta.run.alpha.imag()};
    if (meta.run.alpha2_set)
        charger["alpha2"] = {meta.run.alpha2.real(), meta.run.alpha2.imag()};
    charger["truncation_deficit"] = meta.truncation_deficit;
    j["charger"] = charger;

    j["grid"] = {{"t_max", meta.run.t_max},
                 {"points", meta.run.grid_points},
                 {"units", "dimensionless omega0 * t"},
                 {"note", "span and sampling are a reproduction choice"}};
    if (meta.run.experiment == config::ExperimentKind::sweep)
        j["sweep"] = {{"alpha_min", meta.run.alpha_min},
                      {"alpha_max", meta.run.alpha_max},
                      {"alpha_step", meta.run.alpha_step},
                      {"pairing", "single amplitude sqrt(2) * alpha, equal mean "
                                  "photon number"}};
    if (meta.run.experiment == config::ExperimentKind::scaling)
        j["scaling"] = {{"n_qubits_list", meta.run.n_qubits_list}};
    j["output"] = {{"dir", meta.run.out_dir},
                   {"normalize_per_cell", meta.run.normalize},
                   {"normalization",
                    "energy, ergotropy / (n_qubits * omega0); power / (n_qubits * "
                    "omega0^2); entropy, mutual_info, charger_entropy / n_qubits"},
                   {"plots", meta.run.plots}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace qb::report
