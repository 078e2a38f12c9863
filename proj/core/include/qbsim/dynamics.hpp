// dynamics.hpp — Exact unitary propagation exp(-iHt) via per-sector
// eigendecomposition, a bound-state fast path for dense time grids, and a
// Taylor matrix-exponential oracle used by tests.
//
// The assembled Hamiltonian is real symmetric, so sector eigenvectors are
// stored as real orthogonal matrices and complex amplitudes are propagated
// through paired real matrix products.

#pragma once

#include "qbsim/hamiltonian.hpp"
#include "qbsim/hilbert.hpp"
#include "qbsim/states.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <vector>

namespace qb::dynamics {

struct TimeGrid {
    std::vector<double> t_values;  // t_values[0] = 0, strictly increasing

    static TimeGrid uniform(double t_max, std::size_t points);
    void validate() const;
};

// Dimensionless default span omega0 * t in [0, 10]; with g = 2 omega0 the
// early power and ergotropy peaks fall well inside it.
TimeGrid default_grid();

struct Propagator {
    struct SectorBlock {
        int excitation = 0;
        std::vector<Eigen::Index> basis_indices;
        Eigen::VectorXd eigenvalues;
        Eigen::MatrixXd eigenvectors;  // orthogonal; columns phase-fixed
    };
    hilbert::SpaceLayout layout;
    std::vector<SectorBlock> sectors;
};

// Diagonalizes each excitation-sector block of H. Requires a real-valued H
// (always the case for the models assembled here). Column phases are fixed so
// the largest-magnitude component of each eigenvector is positive.
Propagator prepare_propagator(const hamiltonian::SparseHermitian& h,
                              const hilbert::SectorDecomposition& sectors,
                              const hilbert::SpaceLayout& layout);

// |psi(t)> = exp(-iHt)|psi0>; t = 0 returns psi0 bit-exactly.
states::PureState evolve(const Propagator& prop, const states::PureState& psi0, double t);

std::vector<states::PureState> evolve_series(const Propagator& prop,
                                             const states::PureState& psi0,
                                             const TimeGrid& grid);

// Propagator bound to a fixed initial state: the eigenbasis projection of
// psi0 is precomputed once, making each time evaluation two real
// matrix-vector products per sector. The propagator must outlive this object.
class BoundState {
public:
    BoundState(const Propagator& prop, const states::PureState& psi0);

    const hilbert::SpaceLayout& layout() const { return prop_->layout; }
    Eigen::VectorXcd at(double t) const;

    // Evaluates the state on every grid point, batched over time blocks so the
    // per-sector work runs as matrix-matrix products; consumer(k, psi) is
    // called in grid order and states are not retained.
    void for_each_time(const std::vector<double>& t_values,
                       const std::function<void(std::size_t, const Eigen::VectorXcd&)>&
                           consumer,
                       std::size_t block = 64) const;

private:
    const Propagator* prop_;
    Eigen::VectorXcd psi0_;
    std::vector<Eigen::VectorXd> proj_re_;  // per sector, V^T psi0
    std::vector<Eigen::VectorXd> proj_im_;
};

// Brute-force scaling-and-squaring Taylor exponential applied to the state
// vector, with no sector structure; verification oracle for tests only.
Eigen::VectorXcd dense_oracle_evolve(const Eigen::MatrixXcd& h_dense,
                                     const Eigen::VectorXcd& psi0, double t,
                                     Eigen::Index dim_limit = 4096);

} // namespace qb::dynamics
