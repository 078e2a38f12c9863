// config.cpp — Sectioned key/value parsing and validation.

#include "qbsim/config.hpp"

#include "qbsim/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qb::config {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) items.push_back(trim(item));
    return items;
}

double parse_double(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("expected a number, got '" + value + "'", line);
    }
}

long parse_int(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("expected an integer, got '" + value + "'", line);
    }
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "yes" || value == "on" || value == "1") return true;
    if (value == "false" || value == "no" || value == "off" || value == "0")
        return false;
    throw ConfigError("expected a boolean, got '" + value + "'", line);
}

// Real scalar or a+bi / a-bi / bi forms.
std::complex<double> parse_complex(const std::string& value, int line) {
    std::string s = value;
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw ConfigError("expected a complex number", line);
    char tail = s.back();
    if (tail != 'i' && tail != 'j') return {parse_double(s, line), 0.0};
    std::string body = s.substr(0, s.size() - 1);
    // Split at the sign separating real and imaginary parts (skip exponents
    // and a leading sign).
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            double re = parse_double(body.substr(0, k), line);
            std::string imag = body.substr(k);
            if (imag == "+" || imag == "-") imag += "1";
            return {re, parse_double(imag, line)};
        }
    }
    std::string imag = body.empty() ? "1" : body;
    return {0.0, parse_double(imag, line)};
}

states::ChargerKind parse_kind(const std::string& value, int line) {
    if (value == "single") return states::ChargerKind::single;
    if (value == "product_pair") return states::ChargerKind::product_pair;
    if (value == "semi_bell_plus") return states::ChargerKind::semi_bell_plus;
    if (value == "semi_bell_minus") return states::ChargerKind::semi_bell_minus;
    if (value == "zeta") return states::ChargerKind::zeta;
    throw ConfigError("unknown charger kind '" + value +
                          "' (single, product_pair, semi_bell_plus, semi_bell_minus, "
                          "zeta)",
                      line);
}

} // namespace

std::string experiment_name(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::series: return "series";
    case ExperimentKind::sweep: return "sweep";
    case ExperimentKind::scaling: return "scaling";
    }
    return "unknown";
}

RunConfig parse_config(const std::string& text) {
    RunConfig run;
    bool experiment_set = false;
    bool g_set = false;

    std::istringstream stream(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(stream, raw)) {
        ++line;
        std::string no_comment = raw.substr(0, raw.find('#'));
        std::string s = trim(no_comment);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw ConfigError("malformed section header '" + s + "'", line);
            section = trim(s.substr(1, s.size() - 2));
            if (section != "model" && section != "charger" && section != "grid" &&
                section != "sweep" && section != "scaling" && section != "output")
                throw ConfigError("unknown section [" + section + "]", line);
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value, got '" + s + "'", line);
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("empty key or value", line);

        if (section.empty()) {
            if (key == "experiment") {
                if (value == "series") run.experiment = ExperimentKind::series;
                else if (value == "sweep") run.experiment = ExperimentKind::sweep;
                else if (value == "scaling") run.experiment = ExperimentKind::scaling;
                else
                    throw ConfigError("unknown experiment '" + value +
                                          "' (series, sweep or scaling)",
                                      line);
                experiment_set = true;
            } else {
                throw ConfigError("unknown top-level key '" + key + "'", line);
            }
        } else if (section == "model") {
            if (key == "omega0") run.omega0 = parse_double(value, line);
            else if (key == "g") { run.g = parse_double(value, line); g_set = true; }
            else if (key == "n_qubits")
                run.n_qubits = static_cast<int>(parse_int(value, line));
            else if (key == "cutoffs") {
                run.cutoffs.clear();
                for (const std::string& item : split_list(value))
                    run.cutoffs.push_back(static_cast<int>(parse_int(item, line)));
            } else if (key == "omega_mode") {
                run.omega_mode.clear();
                for (const std::string& item : split_list(value))
                    run.omega_mode.push_back(parse_double(item, line));
            } else {
                throw ConfigError("unknown key 'model." + key + "'", line);
            }
        } else if (section == "charger") {
            if (key == "kind") { run.kind = parse_kind(value, line); run.kind_set = true; }
            else if (key == "alpha") run.alpha = parse_complex(value, line);
            else if (key == "alpha2") {
                run.alpha2 = parse_complex(value, line);
                run.alpha2_set = true;
            } else {
                throw ConfigError("unknown key 'charger." + key + "'", line);
            }
        } else if (section == "grid") {
            if (key == "t_max") run.t_max = parse_double(value, line);
            else if (key == "points") {
                long p = parse_int(value, line);
                if (p < 2) throw ConfigError("grid.points must be >= 2", line);
                run.grid_points = static_cast<std::size_t>(p);
            } else {
                throw ConfigError("unknown key 'grid." + key + "'", line);
            }
        } else if (section == "sweep") {
            if (key == "alpha_min") run.alpha_min = parse_double(value, line);
            else if (key == "alpha_max") run.alpha_max = parse_double(value, line);
            else if (key == "alpha_step") run.alpha_step = parse_double(value, line);
            else
                throw ConfigError("unknown key 'sweep." + key + "'", line);
        } else if (section == "scaling") {
            if (key == "n_qubits_list") {
                run.n_qubits_list.clear();
                for (const std::string& item : split_list(value))
                    run.n_qubits_list.push_back(
                        static_cast<int>(parse_int(item, line)));
            } else {
                throw ConfigError("unknown key 'scaling." + key + "'", line);
            }
        } else if (section == "output") {
            if (key == "dir") run.out_dir = value;
            else if (key == "normalize") run.normalize = parse_bool(value, line);
            else if (key == "plots") run.plots = parse_bool(value, line);
            else
                throw ConfigError("unknown key 'output." + key + "'", line);
        }
    }

    if (!experiment_set)
        throw ConfigError("experiment required (series, sweep or scaling)");
    if (!g_set) run.g = 2.0 * run.omega0;

    if (!(run.omega0 > 0.0)) throw ConfigError("model.omega0 must be > 0");
    if (run.n_qubits < 1) throw ConfigError("model.n_qubits must be >= 1");
    if (!(run.t_max > 0.0)) throw ConfigError("grid.t_max must be > 0");
    if (run.experiment == ExperimentKind::series && !run.kind_set)
        throw ConfigError("charger.kind required");
    if (run.experiment == ExperimentKind::sweep) {
        if (!(run.alpha_step > 0.0) || !(run.alpha_min > 0.0) ||
            run.alpha_max < run.alpha_min)
            throw ConfigError("sweep range needs 0 < alpha_min <= alpha_max and "
                              "alpha_step > 0");
    }
    if (run.experiment == ExperimentKind::scaling && run.n_qubits_list.empty())
        throw ConfigError("scaling.n_qubits_list must not be empty");
    for (int c : run.cutoffs)
        if (c < 0) throw ConfigError("model.cutoffs entries must be >= 0");
    return run;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

states::ChargerSpec charger_spec(const RunConfig& run) {
    switch (run.kind) {
    case states::ChargerKind::single:
        return states::ChargerSpec::single(run.alpha);
    case states::ChargerKind::product_pair:
        return states::ChargerSpec::product_pair(
            run.alpha, run.alpha2_set ? run.alpha2 : -run.alpha);
    case states::ChargerKind::semi_bell_plus:
        return states::ChargerSpec::semi_bell_plus(run.alpha);
    case states::ChargerKind::semi_bell_minus:
        return states::ChargerSpec::semi_bell_minus(run.alpha);
    case states::ChargerKind::zeta:
        return states::ChargerSpec::zeta(run.alpha);
    }
    throw ConfigError("invalid charger kind");
}

hamiltonian::ModelConfig model_config(const RunConfig& run) {
    hamiltonian::ModelConfig model;
    model.omega0 = run.omega0;
    model.g = run.g;
    model.n_qubits = run.n_qubits;
    if (run.experiment == ExperimentKind::series) {
        states::ChargerSpec spec = charger_spec(run);
        model.mode_cutoffs =
            run.cutoffs.empty() ? states::default_cutoffs(spec) : run.cutoffs;
        if (static_cast<int>(model.mode_cutoffs.size()) != spec.n_modes())
            throw ConfigError("model.cutoffs needs " + std::to_string(spec.n_modes()) +
                              " entries for this charger kind");
    } else {
        model.mode_cutoffs = run.cutoffs;  // sweeps derive cutoffs per amplitude
    }
    if (run.omega_mode.empty()) {
        model.omega_mode.assign(model.mode_cutoffs.size(), run.omega0);
    } else {
        if (run.omega_mode.size() != model.mode_cutoffs.size())
            throw ConfigError("model.omega_mode length must match the mode count");
        model.omega_mode = run.omega_mode;
    }
    return model;
}

dynamics::TimeGrid time_grid(const RunConfig& run) {
    return dynamics::TimeGrid::uniform(run.t_max, run.grid_points);
}

std::vector<double> sweep_alphas(const RunConfig& run) {
    std::vector<double> alphas;
    for (int k = 0;; ++k) {
        double a = run.alpha_min + k * run.alpha_step;
        if (a > run.alpha_max + 1e-12) break;
        alphas.push_back(a);
    }
    return alphas;
}

} // namespace qb::config
