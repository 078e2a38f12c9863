// states.cpp — Coherent, product, and entangled charger state construction.

#include "qbsim/states.hpp"

#include "qbsim/errors.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace qb::states {

namespace {

Eigen::VectorXcd kron(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    Eigen::VectorXcd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

// Smallest cutoff whose Poisson tail weight is <= tol.
int cutoff_for_tolerance(double abs_alpha, double tol) {
    const double lambda = abs_alpha * abs_alpha;
    double log_w = -lambda;  // log of the n = 0 Poisson weight
    double cumulative = std::exp(log_w);
    int n = 0;
    while (1.0 - cumulative > tol && n < 100000) {
        ++n;
        log_w += std::log(lambda) - std::log(static_cast<double>(n));
        cumulative += std::exp(log_w);
    }
    return n;
}

} // namespace

int recommended_cutoff(std::complex<double> alpha) {
    double a = std::abs(alpha);
    return std::max(20, static_cast<int>(std::ceil(a * a + 7.0 * a + 10.0)));
}

CoherentVector coherent_amplitudes(std::complex<double> alpha, int cutoff,
                                   double deficit_tol) {
    if (cutoff < 0)
        throw std::invalid_argument("coherent_amplitudes: cutoff must be >= 0");
    Eigen::VectorXcd c(cutoff + 1);
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= cutoff; ++n)
        c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    const double kept = c.squaredNorm();
    const double deficit = std::max(0.0, 1.0 - kept);
    if (deficit > deficit_tol) {
        int required = cutoff_for_tolerance(std::abs(alpha), deficit_tol);
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "coherent state |alpha| = %g loses weight %.3g at cutoff %d; "
                      "required cutoff %d",
                      std::abs(alpha), deficit, cutoff, required);
        throw TruncationError(buf, required);
    }
    c /= std::sqrt(kept);
    return {std::move(c), deficit};
}

std::string charger_kind_name(ChargerKind kind) {
    switch (kind) {
    case ChargerKind::single: return "single";
    case ChargerKind::product_pair: return "product_pair";
    case ChargerKind::semi_bell_plus: return "semi_bell_plus";
    case ChargerKind::semi_bell_minus: return "semi_bell_minus";
    case ChargerKind::zeta: return "zeta";
    }
    return "unknown";
}

ChargerSpec ChargerSpec::single(std::complex<double> alpha) {
    return {ChargerKind::single, alpha, {}};
}
ChargerSpec ChargerSpec::product_pair(std::complex<double> a1, std::complex<double> a2) {
    return {ChargerKind::product_pair, a1, a2};
}
ChargerSpec ChargerSpec::semi_bell_plus(std::complex<double> alpha) {
    return {ChargerKind::semi_bell_plus, alpha, -alpha};
}
ChargerSpec ChargerSpec::semi_bell_minus(std::complex<double> alpha) {
    return {ChargerKind::semi_bell_minus, alpha, -alpha};
}
ChargerSpec ChargerSpec::zeta(std::complex<double> alpha) {
    return {ChargerKind::zeta, alpha, {}};
}

double max_mode_amplitude(const ChargerSpec& spec, int mode) {
    if (mode < 0 || mode >= spec.n_modes())
        throw std::invalid_argument("max_mode_amplitude: mode out of range");
    switch (spec.kind) {
    case ChargerKind::single:
        return std::abs(spec.alpha1);
    case ChargerKind::product_pair:
        return std::abs(mode == 0 ? spec.alpha1 : spec.alpha2);
    case ChargerKind::semi_bell_plus:
    case ChargerKind::semi_bell_minus:
    case ChargerKind::zeta:
        return std::abs(spec.alpha1);
    }
    throw std::logic_error("max_mode_amplitude: unhandled kind");
}

std::vector<int> default_cutoffs(const ChargerSpec& spec) {
    std::vector<int> cutoffs(spec.n_modes());
    for (int m = 0; m < spec.n_modes(); ++m)
        cutoffs[m] = recommended_cutoff(max_mode_amplitude(spec, m));
    return cutoffs;
}

ChargerState two_branch_pair_state(std::complex<double> a1, std::complex<double> b1,
                                   std::complex<double> c1, std::complex<double> a2,
                                   std::complex<double> b2, std::complex<double> c2,
                                   const std::vector<int>& cutoffs, double deficit_tol) {
    if (cutoffs.size() != 2)
        throw std::invalid_argument("two_branch_pair_state: expected 2 cutoffs");
    CoherentVector va1 = coherent_amplitudes(a1, cutoffs[0], deficit_tol);
    CoherentVector vb1 = coherent_amplitudes(b1, cutoffs[1], deficit_tol);
    CoherentVector va2 = coherent_amplitudes(a2, cutoffs[0], deficit_tol);
    CoherentVector vb2 = coherent_amplitudes(b2, cutoffs[1], deficit_tol);
    double deficit = std::max(std::max(va1.deficit, vb1.deficit),
                              std::max(va2.deficit, vb2.deficit));
    Eigen::VectorXcd sum =
        c1 * kron(va1.amplitudes, vb1.amplitudes) + c2 * kron(va2.amplitudes, vb2.amplitudes);
    double norm = sum.norm();
    if (norm < 1e-8)
        throw std::invalid_argument(
            "two_branch_pair_state: degenerate superposition (norm " +
            std::to_string(norm) + ")");
    sum /= norm;
    return {cutoffs, std::move(sum), deficit};
}

ChargerState build_charger_state(const ChargerSpec& spec, const std::vector<int>& cutoffs,
                                 double deficit_tol) {
    if (static_cast<int>(cutoffs.size()) != spec.n_modes())
        throw std::invalid_argument("build_charger_state: expected " +
                                    std::to_string(spec.n_modes()) + " cutoffs, got " +
                                    std::to_string(cutoffs.size()));
    switch (spec.kind) {
    case ChargerKind::single: {
        CoherentVector v = coherent_amplitudes(spec.alpha1, cutoffs[0], deficit_tol);
        return {cutoffs, std::move(v.amplitudes), v.deficit};
    }
    case ChargerKind::product_pair: {
        CoherentVector v1 = coherent_amplitudes(spec.alpha1, cutoffs[0], deficit_tol);
        CoherentVector v2 = coherent_amplitudes(spec.alpha2, cutoffs[1], deficit_tol);
        return {cutoffs, kron(v1.amplitudes, v2.amplitudes),
                std::max(v1.deficit, v2.deficit)};
    }
    case ChargerKind::semi_bell_plus:
        return two_branch_pair_state(spec.alpha1, spec.alpha1, 1.0, -spec.alpha1,
                                     -spec.alpha1, 1.0, cutoffs, deficit_tol);
    case ChargerKind::semi_bell_minus:
        return two_branch_pair_state(spec.alpha1, spec.alpha1, 1.0, -spec.alpha1,
                                     -spec.alpha1, -1.0, cutoffs, deficit_tol);
    case ChargerKind::zeta:
        return two_branch_pair_state(spec.alpha1, 0.0, 1.0, 0.0, spec.alpha1, 1.0,
                                     cutoffs, deficit_tol);
    }
    throw std::logic_error("build_charger_state: unhandled kind");
}

double mean_photon_number(const ChargerState& state) {
    double mean = 0.0;
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
        Eigen::Index rem = i;
        int photons = 0;
        for (int m = static_cast<int>(state.cutoffs.size()) - 1; m >= 0; --m) {
            Eigen::Index radix = state.cutoffs[m] + 1;
            photons += static_cast<int>(rem % radix);
            rem /= radix;
        }
        mean += photons * std::norm(state.amplitudes(i));
    }
    return mean;
}

void PureState::validate() const {
    if (amplitudes.size() != layout.total_dim)
        throw InvariantViolation("pure state length does not match layout");
    double err = std::abs(amplitudes.norm() - 1.0);
    if (err > 1e-12)
        throw InvariantViolation("pure state norm deviates from 1 by " +
                                 std::to_string(err));
}

PureState build_initial_state(const hilbert::SpaceLayout& layout, const ChargerSpec& spec,
                              double deficit_tol) {
    if (spec.n_modes() != layout.n_modes())
        throw std::invalid_argument("build_initial_state: charger kind needs " +
                                    std::to_string(spec.n_modes()) + " modes, layout has " +
                                    std::to_string(layout.n_modes()));
    return build_initial_state(layout,
                               build_charger_state(spec, layout.mode_cutoffs, deficit_tol));
}

PureState build_initial_state(const hilbert::SpaceLayout& layout,
                              const ChargerState& charger) {
    if (charger.cutoffs != layout.mode_cutoffs)
        throw std::invalid_argument("build_initial_state: charger cutoffs mismatch");
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(layout.total_dim);
    psi.head(layout.charger_dim()) = charger.amplitudes;  // battery index 0 = all ground
    return {layout, std::move(psi)};
}

} // namespace qb::states
