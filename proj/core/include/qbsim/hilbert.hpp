// hilbert.hpp — Composite Hilbert-space bookkeeping: basis indexing,
// excitation sectors, and battery/charger partial traces.
//
// The space is N_B qubits tensored with one or two truncated bosonic modes.
// Basis ordering is mixed-radix row-major with the qubits as the
// most-significant digits, so a global index splits as
//   index = battery_index * charger_dim + charger_index
// and the battery reduced state is a strided sum.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace qb::hilbert {

struct BasisState {
    std::vector<int> qubit_bits;   // 1 = excited |e>, most-significant digit first
    std::vector<int> occupations;  // per-mode Fock occupation

    int total_excitation() const;
};

struct SpaceLayout {
    int n_qubits{0};
    std::vector<int> mode_cutoffs;  // per-mode max occupation n_max (dim = n_max + 1)
    Eigen::Index total_dim{0};

    int n_modes() const { return static_cast<int>(mode_cutoffs.size()); }
    Eigen::Index battery_dim() const { return Eigen::Index(1) << n_qubits; }
    Eigen::Index charger_dim() const;
};

// Validates n_qubits >= 1, 1 or 2 modes, cutoffs >= 0; fills total_dim.
SpaceLayout make_layout(int n_qubits, std::vector<int> mode_cutoffs);

Eigen::Index basis_index(const SpaceLayout& layout, const BasisState& state);
BasisState basis_state(const SpaceLayout& layout, Eigen::Index index);

// Total excitation number of a basis index (excited qubits + photons).
int excitation_of(const SpaceLayout& layout, Eigen::Index index);

// ----------------------------- excitation sectors ----------------------------

// The rotating-wave interaction conserves total excitation, so the
// Hamiltonian is block-diagonal over these sectors.
struct SectorDecomposition {
    struct Sector {
        int excitation{0};
        std::vector<Eigen::Index> basis_indices;  // ascending
    };
    std::vector<Sector> sectors;  // ascending in excitation, partition of [0, total_dim)
};

SectorDecomposition build_sectors(const SpaceLayout& layout);

// ------------------------------ density matrices -----------------------------

struct DensityMatrix {
    Eigen::MatrixXcd mat;

    Eigen::Index dim() const { return mat.rows(); }
    // Throws InvariantViolation unless Hermitian (1e-12), unit trace (1e-10),
    // and positive semidefinite (eigenvalues >= -1e-10).
    void validate() const;
};

enum class Subsystem { battery, charger };

// Reshape of a pure state's amplitudes into a battery_dim x charger_dim matrix.
Eigen::MatrixXcd amplitude_matrix(const Eigen::VectorXcd& psi, const SpaceLayout& layout);

// Reduced state of the kept block; the complementary block is traced out.
DensityMatrix partial_trace(const Eigen::VectorXcd& psi, const SpaceLayout& layout,
                            Subsystem keep);
DensityMatrix partial_trace(const Eigen::MatrixXcd& rho, const SpaceLayout& layout,
                            Subsystem keep);

} // namespace qb::hilbert
