// test_states.cpp — Coherent vectors, charger preparations, and initial
// product states.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include <qbsim/errors.hpp>
#include <qbsim/states.hpp>

#include <cmath>
#include <complex>

using namespace qb;
using std::complex;

TEST_CASE("cutoff rule floors at 20 and tracks the amplitude") {
    CHECK(states::recommended_cutoff(0.0) == 20);
    CHECK(states::recommended_cutoff(1.0) == 20);
    CHECK(states::recommended_cutoff(2.5) == 34);
    CHECK(states::recommended_cutoff(3.0) == 40);
    CHECK(states::recommended_cutoff(complex<double>(0.0, 2.5)) == 34);
}

TEST_CASE("small-amplitude coherent weights match the closed form") {
    const states::CoherentVector c = states::coherent_amplitudes(1.0, 40);
    CHECK(std::abs(c.amplitudes(0).real() - 0.606531) < 1e-6);
    CHECK(std::abs(c.amplitudes(1).real() - 0.606531) < 1e-6);
    CHECK(std::abs(c.amplitudes.norm() - 1.0) < 1e-14);
    CHECK(c.deficit < 1e-12);
}

TEST_CASE("coherent amplitudes match the log-factorial reference") {
    const complex<double> alpha(1.3, -0.7);
    const int cutoff = states::recommended_cutoff(alpha);
    const states::CoherentVector c = states::coherent_amplitudes(alpha, cutoff);
    const Eigen::VectorXcd ref = oracle::coherent_reference(alpha, cutoff);
    CHECK((c.amplitudes - ref).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("mean photon number reproduces the Poisson mean") {
    const double alpha = 2.5;
    const states::ChargerSpec spec = states::ChargerSpec::single(alpha);
    const states::ChargerState state =
        states::build_charger_state(spec, states::default_cutoffs(spec));
    CHECK(std::abs(states::mean_photon_number(state) - 6.25) < 1e-6);
}

TEST_CASE("vacuum charger is the lone zero-occupation amplitude") {
    const states::ChargerSpec spec = states::ChargerSpec::single(0.0);
    const states::ChargerState state = states::build_charger_state(spec, {20});
    CHECK(std::abs(state.amplitudes(0) - complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(state.amplitudes.tail(20).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("insufficient cutoff raises the truncation guard") {
    try {
        states::coherent_amplitudes(9.0, 5);
        FAIL("expected a truncation failure");
    } catch (const TruncationError& e) {
        CHECK(e.required_cutoff > 5);
        const states::CoherentVector ok =
            states::coherent_amplitudes(9.0, e.required_cutoff);
        CHECK(ok.deficit <= states::kDefaultDeficitTol);
    }
}

TEST_CASE("product pair is the tensor product of two coherent vectors") {
    const double alpha = 1.2;
    const states::ChargerSpec spec = states::ChargerSpec::product_pair(alpha, alpha);
    const std::vector<int> cutoffs = states::default_cutoffs(spec);
    const states::ChargerState state = states::build_charger_state(spec, cutoffs);

    const Eigen::VectorXcd one =
        states::coherent_amplitudes(alpha, cutoffs[0]).amplitudes;
    Eigen::VectorXcd expect(one.size() * one.size());
    for (Eigen::Index i = 0; i < one.size(); ++i)
        expect.segment(i * one.size(), one.size()) = one(i) * one;
    CHECK((state.amplitudes - expect).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(states::mean_photon_number(state) - 2 * alpha * alpha) < 1e-8);
}

TEST_CASE("plus combination reproduces its normalization constant") {
    const double alpha = 2.5;
    const states::ChargerSpec spec = states::ChargerSpec::semi_bell_plus(alpha);
    const std::vector<int> cutoffs = states::default_cutoffs(spec);
    const states::ChargerState state = states::build_charger_state(spec, cutoffs);
    CHECK(std::abs(state.amplitudes.norm() - 1.0) < 1e-14);

    // Unnormalized |a,a> + |-a,-a> against the built unit vector: the overlap
    // recovers sqrt(N) with N = 2 (1 + exp(-4 a^2)).
    const Eigen::VectorXcd plus =
        states::coherent_amplitudes(alpha, cutoffs[0]).amplitudes;
    const Eigen::VectorXcd minus =
        states::coherent_amplitudes(-alpha, cutoffs[0]).amplitudes;
    Eigen::VectorXcd unnormalized(plus.size() * plus.size());
    for (Eigen::Index i = 0; i < plus.size(); ++i)
        unnormalized.segment(i * plus.size(), plus.size()) =
            plus(i) * plus + minus(i) * minus;
    const double gram = std::abs(state.amplitudes.dot(unnormalized));
    const double expected = std::sqrt(2.0 * (1.0 + std::exp(-4.0 * alpha * alpha)));
    CHECK(std::abs(gram - expected) < 1e-8);
}

TEST_CASE("minus combination reproduces its normalization constant") {
    const double alpha = 1.0;
    const states::ChargerSpec spec = states::ChargerSpec::semi_bell_minus(alpha);
    const std::vector<int> cutoffs = states::default_cutoffs(spec);
    const states::ChargerState state = states::build_charger_state(spec, cutoffs);

    const Eigen::VectorXcd plus =
        states::coherent_amplitudes(alpha, cutoffs[0]).amplitudes;
    const Eigen::VectorXcd minus =
        states::coherent_amplitudes(-alpha, cutoffs[0]).amplitudes;
    Eigen::VectorXcd unnormalized(plus.size() * plus.size());
    for (Eigen::Index i = 0; i < plus.size(); ++i)
        unnormalized.segment(i * plus.size(), plus.size()) =
            plus(i) * plus - minus(i) * minus;
    const double gram = std::abs(state.amplitudes.dot(unnormalized));
    const double expected = std::sqrt(2.0 * (1.0 - std::exp(-4.0 * alpha * alpha)));
    CHECK(std::abs(gram - expected) < 1e-8);
}

TEST_CASE("plus and minus combinations are orthogonal") {
    const double alpha = 1.0;
    const std::vector<int> cutoffs = {25, 25};
    const states::ChargerState plus =
        states::build_charger_state(states::ChargerSpec::semi_bell_plus(alpha), cutoffs);
    const states::ChargerState minus = states::build_charger_state(
        states::ChargerSpec::semi_bell_minus(alpha), cutoffs);
    CHECK(std::abs(plus.amplitudes.dot(minus.amplitudes)) < 1e-12);
}

TEST_CASE("degenerate minus combination is rejected") {
    CHECK_THROWS_AS(states::build_charger_state(
                        states::ChargerSpec::semi_bell_minus(0.0), {20, 20}),
                    std::invalid_argument);
}

TEST_CASE("one-sided superposition matches its normalization constant") {
    const double alpha = 2.5;
    const states::ChargerSpec spec = states::ChargerSpec::zeta(alpha);
    const std::vector<int> cutoffs = states::default_cutoffs(spec);
    const states::ChargerState state = states::build_charger_state(spec, cutoffs);
    CHECK(std::abs(state.amplitudes.norm() - 1.0) < 1e-14);

    const Eigen::VectorXcd coh =
        states::coherent_amplitudes(alpha, cutoffs[0]).amplitudes;
    Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(coh.size());
    vac(0) = 1.0;
    Eigen::VectorXcd unnormalized(coh.size() * coh.size());
    for (Eigen::Index i = 0; i < coh.size(); ++i)
        unnormalized.segment(i * coh.size(), coh.size()) = coh(i) * vac + vac(i) * coh;
    const double gram = std::abs(state.amplitudes.dot(unnormalized));
    const double expected = std::sqrt(2.0 * (1.0 + std::exp(-alpha * alpha)));
    CHECK(std::abs(gram - expected) < 1e-8);
}

TEST_CASE("entangled pair mean photon number follows the cat-state formula") {
    for (double alpha : {0.8, 1.5, 2.5}) {
        const states::ChargerSpec spec = states::ChargerSpec::semi_bell_plus(alpha);
        const states::ChargerState state =
            states::build_charger_state(spec, states::default_cutoffs(spec));
        const double x = 2.0 * alpha * alpha;
        const double expected = x * std::tanh(x);
        CHECK(std::abs(states::mean_photon_number(state) - expected) < 1e-8);
    }
}

TEST_CASE("general two-branch constructor reproduces the named kinds") {
    const double alpha = 1.7;
    const std::vector<int> cutoffs = {30, 30};
    const states::ChargerState via_kind =
        states::build_charger_state(states::ChargerSpec::zeta(alpha), cutoffs);
    const states::ChargerState via_branches = states::two_branch_pair_state(
        alpha, 0.0, 1.0, 0.0, alpha, 1.0, cutoffs);
    CHECK((via_kind.amplitudes - via_branches.amplitudes).cwiseAbs().maxCoeff() <
          1e-14);
}

TEST_CASE("initial state is all-ground battery tensor charger block") {
    const hilbert::SpaceLayout layout = hilbert::make_layout(2, {20});
    const states::PureState psi =
        states::build_initial_state(layout, states::ChargerSpec::single(1.0));
    CHECK(std::abs(psi.amplitudes.norm() - 1.0) < 1e-14);
    const Eigen::VectorXcd charger =
        states::coherent_amplitudes(1.0, 20).amplitudes;
    CHECK((psi.amplitudes.head(21) - charger).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(psi.amplitudes.tail(psi.amplitudes.size() - 21).cwiseAbs().maxCoeff() ==
          0.0);
}

TEST_CASE("initial state demands matching mode counts") {
    const hilbert::SpaceLayout one_mode = hilbert::make_layout(2, {20});
    CHECK_THROWS_AS(states::build_initial_state(
                        one_mode, states::ChargerSpec::product_pair(1.0, 1.0)),
                    std::invalid_argument);
}
