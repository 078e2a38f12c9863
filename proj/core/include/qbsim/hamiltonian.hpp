// hamiltonian.hpp — Tavis–Cummings Hamiltonian assembly in sparse Hermitian
// coordinate form: qubit splitting, mode energies, and the rotating-wave
// qubit–mode exchange coupling. Also the standalone battery Hamiltonian used
// as the ergotropy reference.

#pragma once

#include "qbsim/hilbert.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace qb::hamiltonian {

// Physical parameters, hbar = 1. Every qubit couples to every mode with the
// same strength g; per-mode frequencies allow off-resonance studies.
struct ModelConfig {
    double omega0 = 1.0;            // qubit level splitting
    double g = 2.0;                 // uniform qubit-mode coupling
    int n_qubits = 4;
    std::vector<int> mode_cutoffs;
    std::vector<double> omega_mode;  // same length as mode_cutoffs

    // Resonant configuration with the default strong coupling g = 2 * omega0.
    static ModelConfig resonant(int n_qubits, std::vector<int> mode_cutoffs,
                                double omega0 = 1.0);

    hilbert::SpaceLayout layout() const;
    void validate() const;  // omega0 > 0, matching vector lengths
};

// Upper triangle + diagonal coordinate storage; the implied matrix is
// Hermitian by construction.
struct SparseHermitian {
    struct Entry {
        Eigen::Index row;
        Eigen::Index col;  // row <= col
        std::complex<double> value;
    };
    Eigen::Index dim = 0;
    std::vector<Entry> entries;

    Eigen::MatrixXcd dense() const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    double expectation(const Eigen::VectorXcd& psi) const;  // Re <psi|H|psi>
    double inf_norm() const;                                // max absolute row sum
    bool is_diagonal() const;
};

// Full H = H_battery + H_modes + H_interaction on the layout's basis.
// Diagonal: sum_i omega0/2 (+1 excited / -1 ground) + sum_j omega_j n_j.
// Off-diagonal: g sqrt(n_j + 1) between (qubit i excited, n_j) and
// (qubit i ground, n_j + 1) for every qubit-mode pair; the raising term out of
// the top Fock level is dropped (truncation closes the ladder).
SparseHermitian build_total_hamiltonian(const ModelConfig& config,
                                        const hilbert::SpaceLayout& layout);

// Diagonal battery Hamiltonian omega0/2 sum_i sigma_z^i on 2^n_qubits states;
// a state with k excited qubits has energy omega0 (k - n_qubits / 2).
SparseHermitian build_battery_hamiltonian(int n_qubits, double omega0);

} // namespace qb::hamiltonian
