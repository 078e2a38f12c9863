// metrics.hpp — Figures of merit for the charging process: stored energy,
// ergotropy (two independent routes), charging power, purity, entropies,
// mutual information, extractable ratio, and quantum consonance.
//
// Energy-like values are absolute (units of omega0 when omega0 = 1); per-cell
// normalization happens at the reporting layer, never here.

#pragma once

#include "qbsim/hamiltonian.hpp"
#include "qbsim/hilbert.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace qb::metrics {

inline constexpr double kEntropyFloor = 1e-14;

// Descending eigendecomposition of a density matrix.
struct Spectrum {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXcd eigenvectors;  // columns matched to eigenvalues
};
Spectrum spectral_decomposition(const hilbert::DensityMatrix& rho);

// Ascending energy eigenbasis of the battery Hamiltonian. Degenerate levels
// keep their basis-index order (stable), which pins down the passive-state
// assignment; ergotropy is invariant under any tie permutation.
struct EnergyLevels {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd eigenvectors;
};
EnergyLevels battery_levels(const hamiltonian::SparseHermitian& h);

// Re Tr(rho H), taken over the sparse entries.
double trace_product(const hilbert::DensityMatrix& rho,
                     const hamiltonian::SparseHermitian& h);

// Tr(rho H) - E_ground, so the all-ground battery stores zero.
double stored_energy(const hilbert::DensityMatrix& rho_b,
                     const hamiltonian::SparseHermitian& h_b);

// Double-sum route: sum_ij p_i eps_j (|<p_i|eps_j>|^2 - delta_ij) with
// populations descending and energies ascending. Values in [-1e-10, 0) clamp
// to zero; anything lower throws InvariantViolation.
double ergotropy(const hilbert::DensityMatrix& rho_b,
                 const hamiltonian::SparseHermitian& h_b);
double ergotropy_from_parts(const Spectrum& rho_spectrum, const EnergyLevels& levels);

// Populations non-increasing over ascending energies; the zero-work state.
struct PassiveState {
    Eigen::VectorXd energies;     // ascending
    Eigen::VectorXd populations;  // non-increasing
    double energy() const { return populations.dot(energies); }
};
PassiveState passive_state(const hilbert::DensityMatrix& rho_b,
                           const hamiltonian::SparseHermitian& h_b);

// Independent route: E(rho) - E(passive state).
double ergotropy_via_passive(const hilbert::DensityMatrix& rho_b,
                             const hamiltonian::SparseHermitian& h_b);

// delta_e / t, with the t -> 0 limit 0 (stored energy grows as t^2).
double charging_power(double delta_e, double t);

double purity(const hilbert::DensityMatrix& rho);

// -sum lambda log2 lambda over eigenvalues above floor; eigenvalues in
// [-1e-10, 0) are clamped to zero first.
double von_neumann_entropy(const hilbert::DensityMatrix& rho,
                           double floor = kEntropyFloor);
double entropy_of_eigenvalues(const Eigen::VectorXd& eigenvalues,
                              double floor = kEntropyFloor);

// Charger-block entropy of a pure global state from the singular values of
// the battery x charger amplitude matrix (Schmidt coefficients); shares no
// code with the reduced-density-matrix eigenvalue route.
double charger_entropy_schmidt(const Eigen::VectorXcd& psi,
                               const hilbert::SpaceLayout& layout,
                               double floor = kEntropyFloor);

double mutual_information(double s_b, double s_c, double s_bc);

// One 2x2 unitary per qubit whose conjugation diagonalizes that qubit's
// reduced state. Degenerate reduced states (gap <= degeneracy_tol) map to the
// identity; otherwise columns are ordered closest-to-computational-basis and
// phased so the largest component is real positive.
std::vector<Eigen::Matrix2cd> local_decohering_unitaries(
    const hilbert::DensityMatrix& rho_b, double degeneracy_tol = 1e-12);

// Sum of |rho^c[k, ~k]| over all basis indices k, where rho^c is rho_b after
// the local decohering rotations and ~k flips every qubit: the coherence
// shared by all cells at once. Defined as 0 for a single qubit.
double quantum_consonance(const hilbert::DensityMatrix& rho_b);

// Consonance is convention-dependent when some reduced state is degenerate;
// this reports the spread over Haar-random choices of the degenerate-qubit
// rotations. min = max = value when nothing is degenerate or samples == 0.
struct ConsonanceSensitivity {
    double value;  // the fixed-convention result
    double min;
    double max;
};
ConsonanceSensitivity consonance_degeneracy_sensitivity(
    const hilbert::DensityMatrix& rho_b, int samples, std::uint64_t seed = 0x9bd1e5,
    double degeneracy_tol = 1e-12);

// ergotropy / delta_e, clamped to [0, 1]; quiet NaN marks the undefined case
// delta_e <= floor.
double extractable_ratio(double ergotropy_value, double delta_e, double floor);

// ------------------------------ record assembly ------------------------------

struct MetricsRecord {
    double t = 0.0;
    double energy = 0.0;
    double ergotropy = 0.0;
    double power = 0.0;
    double gamma = 0.0;  // NaN when stored energy is below the ratio floor
    double purity = 1.0;
    double entropy = 0.0;
    double mutual_info = 0.0;
    double consonance = 0.0;
    double charger_entropy = 0.0;
};

// Battery Hamiltonian with its cached level structure and derived scales.
struct BatteryReference {
    hamiltonian::SparseHermitian h;
    EnergyLevels levels;
    double ground_energy = 0.0;
    double capacity = 0.0;  // top level minus ground, n_qubits * omega0

    static BatteryReference make(int n_qubits, double omega0);
};

// Full record for one snapshot of a globally pure evolution. The global state
// stays pure under the closed dynamics, so S(rho_BC) = 0 and mutual
// information is S_B + S_C. Throws InvariantViolation when any record
// invariant fails (ergotropy range, two-route agreement, purity bounds).
MetricsRecord evaluate_record(const Eigen::VectorXcd& psi,
                              const hilbert::SpaceLayout& layout,
                              const BatteryReference& battery, double t);

} // namespace qb::metrics
