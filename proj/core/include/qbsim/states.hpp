// states.hpp — Initial-state construction: truncated coherent vectors, product
// and entangled two-mode charger states, and full battery-plus-charger vectors.
//
// Coherent vectors are truncated at a finite Fock cutoff and renormalized; the
// weight lost to truncation (the deficit) is surfaced so callers can assert it
// stays below tolerance.

#pragma once

#include "qbsim/hilbert.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace qb::states {

inline constexpr double kDefaultDeficitTol = 1e-10;

// Per-mode cutoff rule max(20, ceil(|a|^2 + 7|a| + 10)): the Poisson tail past
// mean + 7 sigma is far below the deficit tolerance for all amplitudes in use.
int recommended_cutoff(std::complex<double> alpha);

struct CoherentVector {
    Eigen::VectorXcd amplitudes;  // unit norm, length cutoff + 1
    double deficit;               // pre-renormalization weight beyond the cutoff
};

// c_n = e^{-|a|^2/2} a^n / sqrt(n!) for n <= cutoff, renormalized.
// Throws TruncationError (naming the required cutoff) if the deficit exceeds
// deficit_tol.
CoherentVector coherent_amplitudes(std::complex<double> alpha, int cutoff,
                                   double deficit_tol = kDefaultDeficitTol);

// ------------------------------- charger states ------------------------------

enum class ChargerKind { single, product_pair, semi_bell_plus, semi_bell_minus, zeta };

// Stable lowercase name ("single", "product_pair", ...), used by configs,
// output labels, and metadata.
std::string charger_kind_name(ChargerKind kind);

// Charger preparation. alpha2 is the second branch (or second mode) amplitude
// and is meaningful for product_pair only; the entangled kinds derive both
// branches from alpha1 with the fixed sign conventions below.
struct ChargerSpec {
    ChargerKind kind = ChargerKind::single;
    std::complex<double> alpha1{};
    std::complex<double> alpha2{};

    int n_modes() const { return kind == ChargerKind::single ? 1 : 2; }

    static ChargerSpec single(std::complex<double> alpha);
    static ChargerSpec product_pair(std::complex<double> a1, std::complex<double> a2);
    // (|a,a> + |-a,-a>) / norm
    static ChargerSpec semi_bell_plus(std::complex<double> alpha);
    // (|a,a> - |-a,-a>) / norm; degenerate (zero norm) at alpha = 0
    static ChargerSpec semi_bell_minus(std::complex<double> alpha);
    // (|a,0> + |0,a>) / norm
    static ChargerSpec zeta(std::complex<double> alpha);
};

// Largest |amplitude| any branch places on the given mode; drives the cutoff rule.
double max_mode_amplitude(const ChargerSpec& spec, int mode);
std::vector<int> default_cutoffs(const ChargerSpec& spec);

struct ChargerState {
    std::vector<int> cutoffs;
    Eigen::VectorXcd amplitudes;  // unit norm, length prod(cutoffs[j] + 1)
    double truncation_deficit;    // worst per-factor coherent deficit
};

// Normalized c1|a1>|b1> + c2|a2>|b2> over two truncated modes; the general
// two-branch constructor behind all entangled charger kinds. Throws
// std::invalid_argument when the superposition is numerically degenerate
// (norm below 1e-8, e.g. the minus combination of identical branches).
ChargerState two_branch_pair_state(std::complex<double> a1, std::complex<double> b1,
                                   std::complex<double> c1, std::complex<double> a2,
                                   std::complex<double> b2, std::complex<double> c2,
                                   const std::vector<int>& cutoffs,
                                   double deficit_tol = kDefaultDeficitTol);

ChargerState build_charger_state(const ChargerSpec& spec, const std::vector<int>& cutoffs,
                                 double deficit_tol = kDefaultDeficitTol);

// Sum_j <n_j> of the truncated, normalized charger state.
double mean_photon_number(const ChargerState& state);

// ------------------------------- global states -------------------------------

struct PureState {
    hilbert::SpaceLayout layout;
    Eigen::VectorXcd amplitudes;

    // Throws InvariantViolation unless the norm is 1 within 1e-12.
    void validate() const;
};

// |g>^(x n_qubits) tensor charger state on the layout's cutoffs.
PureState build_initial_state(const hilbert::SpaceLayout& layout, const ChargerSpec& spec,
                              double deficit_tol = kDefaultDeficitTol);
PureState build_initial_state(const hilbert::SpaceLayout& layout,
                              const ChargerState& charger);

} // namespace qb::states
