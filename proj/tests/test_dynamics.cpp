// test_dynamics.cpp — Sector propagator against two independent matrix
// exponentials, conservation structure, and the bound-state fast path.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include <qbsim/dynamics.hpp>
#include <qbsim/errors.hpp>
#include <qbsim/hamiltonian.hpp>
#include <qbsim/states.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace qb;

namespace {

struct Fixture {
    hamiltonian::ModelConfig model;
    hilbert::SpaceLayout layout;
    hamiltonian::SparseHermitian h;
    dynamics::Propagator prop;

    explicit Fixture(hamiltonian::ModelConfig m)
        : model(std::move(m)),
          layout(model.layout()),
          h(hamiltonian::build_total_hamiltonian(model, layout)),
          prop(dynamics::prepare_propagator(h, hilbert::build_sectors(layout), layout)) {}

    states::PureState random_initial(std::uint64_t seed) const {
        states::PureState psi;
        psi.layout = layout;
        psi.amplitudes = oracle::random_state(layout.total_dim, seed);
        return psi;
    }
};

} // namespace

TEST_CASE("uniform grid spans zero to t_max inclusive") {
    const dynamics::TimeGrid grid = dynamics::TimeGrid::uniform(10.0, 1001);
    REQUIRE(grid.t_values.size() == 1001);
    CHECK(grid.t_values.front() == 0.0);
    CHECK(grid.t_values.back() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(grid.t_values[1] == doctest::Approx(0.01).epsilon(1e-12));
    CHECK_NOTHROW(grid.validate());

    const dynamics::TimeGrid fallback = dynamics::default_grid();
    CHECK(fallback.t_values.size() == 1001);
    CHECK(fallback.t_values.back() == doctest::Approx(10.0));
}

TEST_CASE("grid validation requires a strictly increasing zero-based axis") {
    dynamics::TimeGrid bad;
    bad.t_values = {0.5, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.t_values = {0.0, 1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.t_values = {};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(dynamics::TimeGrid::uniform(-1.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(dynamics::TimeGrid::uniform(1.0, 1), std::invalid_argument);
}

TEST_CASE("sector eigensystems reassemble the Hamiltonian") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(2, {3, 2}));
    const Eigen::MatrixXcd dense = fx.h.dense();
    for (const auto& sector : fx.prop.sectors) {
        const Eigen::Index n = Eigen::Index(sector.basis_indices.size());
        REQUIRE(sector.eigenvectors.rows() == n);
        CHECK((sector.eigenvectors.transpose() * sector.eigenvectors -
               Eigen::MatrixXd::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
        Eigen::MatrixXd block(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                block(i, j) = dense(sector.basis_indices[i], sector.basis_indices[j]).real();
        const Eigen::MatrixXd rebuilt = sector.eigenvectors *
                                        sector.eigenvalues.asDiagonal() *
                                        sector.eigenvectors.transpose();
        CHECK((rebuilt - block).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("three evolution routes agree on a random state") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(2, {4}));
    const states::PureState psi0 = fx.random_initial(101);
    const Eigen::MatrixXcd dense = fx.h.dense();
    for (double t : {0.3, 1.7, 4.9}) {
        const Eigen::VectorXcd sector = dynamics::evolve(fx.prop, psi0, t).amplitudes;
        const Eigen::VectorXcd taylor =
            dynamics::dense_oracle_evolve(dense, psi0.amplitudes, t);
        const Eigen::VectorXcd eigen = oracle::expm_evolve(dense, psi0.amplitudes, t);
        CHECK((sector - taylor).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((sector - eigen).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("time zero returns the initial vector bit-exactly") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(2, {3}));
    const states::PureState psi0 = fx.random_initial(5);
    const states::PureState back = dynamics::evolve(fx.prop, psi0, 0.0);
    for (Eigen::Index i = 0; i < psi0.amplitudes.size(); ++i)
        CHECK(back.amplitudes(i) == psi0.amplitudes(i));
}

TEST_CASE("evolution preserves norm energy and excitation") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(3, {5}));
    const states::PureState psi0 = fx.random_initial(77);
    const double e0 = fx.h.expectation(psi0.amplitudes);

    Eigen::VectorXd excitation(fx.layout.total_dim);
    for (Eigen::Index i = 0; i < fx.layout.total_dim; ++i)
        excitation(i) = hilbert::excitation_of(fx.layout, i);
    const double n0 =
        (psi0.amplitudes.cwiseAbs2().array() * excitation.array()).sum();

    for (double t : {0.4, 2.2, 7.7}) {
        const states::PureState psi = dynamics::evolve(fx.prop, psi0, t);
        CHECK(std::abs(psi.amplitudes.norm() - 1.0) < 1e-12);
        CHECK(std::abs(fx.h.expectation(psi.amplitudes) - e0) < 1e-10 * std::abs(e0));
        const double nt =
            (psi.amplitudes.cwiseAbs2().array() * excitation.array()).sum();
        CHECK(std::abs(nt - n0) < 1e-10 * n0);
    }
}

TEST_CASE("evolution composes over time splits") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(2, {4}));
    const states::PureState psi0 = fx.random_initial(13);
    const states::PureState direct = dynamics::evolve(fx.prop, psi0, 2.9);
    const states::PureState stepped =
        dynamics::evolve(fx.prop, dynamics::evolve(fx.prop, psi0, 1.2), 1.7);
    CHECK((direct.amplitudes - stepped.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("zero coupling freezes populations") {
    hamiltonian::ModelConfig m = hamiltonian::ModelConfig::resonant(2, {4});
    m.g = 0.0;
    const Fixture fx(m);
    const states::PureState psi0 = fx.random_initial(19);
    const states::PureState psi = dynamics::evolve(fx.prop, psi0, 3.3);
    CHECK((psi.amplitudes.cwiseAbs() - psi0.amplitudes.cwiseAbs()).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("one-excitation exchange oscillates sinusoidally") {
    const double g = 2.0;
    const Fixture fx(hamiltonian::ModelConfig::resonant(1, {6}));
    states::PureState psi0;
    psi0.layout = fx.layout;
    psi0.amplitudes = Eigen::VectorXcd::Zero(fx.layout.total_dim);
    psi0.amplitudes(1) = 1.0;  // ground qubit, one photon

    for (double t : {0.1, 0.37, 1.9, 5.3}) {
        const states::PureState psi = dynamics::evolve(fx.prop, psi0, t);
        double excited_population = 0.0;
        for (Eigen::Index i = fx.layout.charger_dim(); i < fx.layout.total_dim; ++i)
            excited_population += std::norm(psi.amplitudes(i));
        const double expected = std::sin(g * t) * std::sin(g * t);
        CHECK(std::abs(excited_population - expected) < 1e-12);
    }
}

TEST_CASE("bound state matches point evolution on and off the grid") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(2, {5}));
    const states::PureState psi0 = fx.random_initial(23);
    const dynamics::BoundState bound(fx.prop, psi0);

    for (double t : {0.0, 0.45, 3.1}) {
        const Eigen::VectorXcd direct = dynamics::evolve(fx.prop, psi0, t).amplitudes;
        CHECK((bound.at(t) - direct).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("batched traversal visits every grid point in order") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(2, {4}));
    const states::PureState psi0 = fx.random_initial(29);
    const dynamics::BoundState bound(fx.prop, psi0);
    const dynamics::TimeGrid grid = dynamics::TimeGrid::uniform(2.0, 11);

    std::vector<std::size_t> order;
    double worst = 0.0;
    bound.for_each_time(
        grid.t_values,
        [&](std::size_t k, const Eigen::VectorXcd& psi) {
            order.push_back(k);
            worst = std::max(
                worst, (psi - bound.at(grid.t_values[k])).cwiseAbs().maxCoeff());
        },
        3);
    REQUIRE(order.size() == grid.t_values.size());
    for (std::size_t k = 0; k < order.size(); ++k) CHECK(order[k] == k);
    CHECK(worst < 1e-12);
}

TEST_CASE("series evolution matches the bound state across a grid") {
    const Fixture fx(hamiltonian::ModelConfig::resonant(1, {8}));
    const states::PureState psi0 = fx.random_initial(31);
    const dynamics::TimeGrid grid = dynamics::TimeGrid::uniform(3.0, 7);
    const std::vector<states::PureState> series =
        dynamics::evolve_series(fx.prop, psi0, grid);
    REQUIRE(series.size() == grid.t_values.size());
    const dynamics::BoundState bound(fx.prop, psi0);
    for (std::size_t k = 0; k < series.size(); ++k)
        CHECK((series[k].amplitudes - bound.at(grid.t_values[k])).cwiseAbs().maxCoeff() <
              1e-12);
}

TEST_CASE("propagator rejects complex and sector-mixing inputs") {
    const hilbert::SpaceLayout layout = hilbert::make_layout(1, {0});
    const hilbert::SectorDecomposition sectors = hilbert::build_sectors(layout);

    hamiltonian::SparseHermitian complex_h;
    complex_h.dim = 2;
    complex_h.entries.push_back({0, 0, std::complex<double>(0.0, 0.5)});
    CHECK_THROWS_AS(dynamics::prepare_propagator(complex_h, sectors, layout),
                    std::invalid_argument);

    hamiltonian::SparseHermitian mixing;
    mixing.dim = 2;
    mixing.entries.push_back({0, 1, std::complex<double>(1.0, 0.0)});
    CHECK_THROWS_AS(dynamics::prepare_propagator(mixing, sectors, layout),
                    InvariantViolation);
}

TEST_CASE("oracle exponential enforces its dimension ceiling") {
    const Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(8, 8);
    const Eigen::VectorXcd psi = oracle::random_state(8, 3);
    CHECK_THROWS_AS(dynamics::dense_oracle_evolve(h, psi, 1.0, 4), ResourceLimitError);
    CHECK_THROWS_AS(
        dynamics::dense_oracle_evolve(h, oracle::random_state(4, 3), 1.0, 8),
        std::invalid_argument);
}
