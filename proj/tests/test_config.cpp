// test_config.cpp — Run-configuration parsing, defaults, validation anchors,
// and resolution into model/charger/grid pieces.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qbsim/config.hpp>
#include <qbsim/errors.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using namespace qb;

TEST_CASE("minimal series document fills documented defaults") {
    const config::RunConfig run = config::parse_config(
        "experiment = series\n"
        "[charger]\n"
        "kind = single\n");
    CHECK(run.experiment == config::ExperimentKind::series);
    CHECK(run.omega0 == doctest::Approx(1.0));
    CHECK(run.g == doctest::Approx(2.0));
    CHECK(run.n_qubits == 4);
    CHECK(run.cutoffs.empty());
    CHECK(run.t_max == doctest::Approx(10.0));
    CHECK(run.grid_points == 1001);
    CHECK(run.alpha.real() == doctest::Approx(2.5));
    CHECK(run.normalize);
    CHECK(run.plots);
    CHECK(run.out_dir == "out");
}

TEST_CASE("coupling defaults to twice the splitting when omitted") {
    const config::RunConfig run = config::parse_config(
        "experiment = series\n"
        "[model]\n"
        "omega0 = 0.5\n"
        "[charger]\n"
        "kind = single\n");
    CHECK(run.g == doctest::Approx(1.0));

    const config::RunConfig overridden = config::parse_config(
        "experiment = series\n"
        "[model]\n"
        "omega0 = 0.5\n"
        "g = 3.25\n"
        "[charger]\n"
        "kind = single\n");
    CHECK(overridden.g == doctest::Approx(3.25));
}

TEST_CASE("series document requires a charger kind") {
    try {
        config::parse_config("experiment = series\n[charger]\nalpha = 1.0\n");
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("charger.kind required") !=
              std::string::npos);
    }
}

TEST_CASE("missing experiment selector is rejected") {
    CHECK_THROWS_AS(config::parse_config("[charger]\nkind = single\n"), ConfigError);
}

TEST_CASE("unknown keys fail with a line anchor") {
    try {
        config::parse_config(
            "experiment = series\n"
            "[charger]\n"
            "kind = single\n"
            "flavor = strawberry\n");
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("type mismatches fail with a line anchor") {
    try {
        config::parse_config(
            "experiment = series\n"
            "[charger]\n"
            "kind = single\n"
            "[grid]\n"
            "points = plenty\n");
        FAIL("expected a config error");
    } catch (const ConfigError& e) {
        CHECK(e.line == 5);
    }
}

TEST_CASE("amplitudes parse as complex numbers") {
    const config::RunConfig run = config::parse_config(
        "experiment = series\n"
        "[charger]\n"
        "kind = single\n"
        "alpha = 1.5+0.5i\n");
    CHECK(run.alpha.real() == doctest::Approx(1.5));
    CHECK(run.alpha.imag() == doctest::Approx(0.5));

    const config::RunConfig negative = config::parse_config(
        "experiment = series\n"
        "[charger]\n"
        "kind = single\n"
        "alpha = -2.0\n");
    CHECK(negative.alpha.real() == doctest::Approx(-2.0));
    CHECK(negative.alpha.imag() == doctest::Approx(0.0));
}

TEST_CASE("default cutoff rule resolves from the amplitude") {
    const config::RunConfig run = config::parse_config(
        "experiment = series\n"
        "[charger]\n"
        "kind = semi_bell_plus\n"
        "alpha = 2.5\n");
    const hamiltonian::ModelConfig model = config::model_config(run);
    CHECK(model.mode_cutoffs == std::vector<int>{34, 34});
    CHECK(model.g == doctest::Approx(2.0));
    CHECK(model.omega_mode == std::vector<double>{1.0, 1.0});
}

TEST_CASE("explicit cutoffs override the rule") {
    const config::RunConfig run = config::parse_config(
        "experiment = series\n"
        "[model]\n"
        "cutoffs = 12, 9\n"
        "[charger]\n"
        "kind = product_pair\n"
        "alpha = 1.0\n");
    const hamiltonian::ModelConfig model = config::model_config(run);
    CHECK(model.mode_cutoffs == std::vector<int>{12, 9});
}

TEST_CASE("product pair negates the amplitude when the second is omitted") {
    const config::RunConfig run = config::parse_config(
        "experiment = series\n"
        "[charger]\n"
        "kind = product_pair\n"
        "alpha = 1.25\n");
    const states::ChargerSpec spec = config::charger_spec(run);
    CHECK(spec.kind == states::ChargerKind::product_pair);
    CHECK(spec.alpha1 == -spec.alpha2);
    CHECK(spec.alpha1.real() == doctest::Approx(1.25));

    const config::RunConfig run2 = config::parse_config(
        "experiment = series\n"
        "[charger]\n"
        "kind = product_pair\n"
        "alpha = 1.25\n"
        "alpha2 = -1.25\n");
    const states::ChargerSpec spec2 = config::charger_spec(run2);
    CHECK(spec2.alpha2.real() == doctest::Approx(-1.25));
}

TEST_CASE("grid section shapes the time axis") {
    const config::RunConfig run = config::parse_config(
        "experiment = series\n"
        "[charger]\n"
        "kind = single\n"
        "[grid]\n"
        "t_max = 4.0\n"
        "points = 81\n");
    const dynamics::TimeGrid grid = config::time_grid(run);
    CHECK(grid.t_values.size() == 81);
    CHECK(grid.t_values.back() == doctest::Approx(4.0));
}

TEST_CASE("sweep bounds expand into the amplitude list") {
    const config::RunConfig run = config::parse_config(
        "experiment = sweep\n"
        "[sweep]\n"
        "alpha_min = 0.1\n"
        "alpha_max = 3.0\n"
        "alpha_step = 0.1\n");
    const std::vector<double> alphas = config::sweep_alphas(run);
    REQUIRE(alphas.size() == 30);
    CHECK(alphas.front() == doctest::Approx(0.1));
    CHECK(alphas.back() == doctest::Approx(3.0));
    CHECK(alphas[14] == doctest::Approx(1.5));
}

TEST_CASE("scaling list parses comma-separated sizes") {
    const config::RunConfig run = config::parse_config(
        "experiment = scaling\n"
        "[scaling]\n"
        "n_qubits_list = 1, 2, 3\n");
    CHECK(run.n_qubits_list == std::vector<int>{1, 2, 3});
}

TEST_CASE("experiment names round-trip") {
    CHECK(config::experiment_name(config::ExperimentKind::series) == "series");
    CHECK(config::experiment_name(config::ExperimentKind::sweep) == "sweep");
    CHECK(config::experiment_name(config::ExperimentKind::scaling) == "scaling");
}

TEST_CASE("config files load from disk and missing paths are anchored errors") {
    const std::string path = "/tmp/qbsim_test_config.ini";
    {
        std::ofstream out(path);
        out << "experiment = series\n[charger]\nkind = zeta\nalpha = 1.0\n";
    }
    const config::RunConfig run = config::load_config_file(path);
    CHECK(run.kind == states::ChargerKind::zeta);
    std::remove(path.c_str());
    CHECK_THROWS_AS(config::load_config_file("/tmp/qbsim_no_such_file.ini"),
                    ConfigError);
}

TEST_CASE("comments and blank lines are ignored") {
    const config::RunConfig run = config::parse_config(
        "# top note\n"
        "experiment = series\n"
        "\n"
        "[charger]\n"
        "# which preparation\n"
        "kind = semi_bell_minus\n"
        "alpha = 0.7\n");
    CHECK(run.kind == states::ChargerKind::semi_bell_minus);
}
