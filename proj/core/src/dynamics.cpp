// dynamics.cpp — Sector-eigendecomposition propagation and the dense oracle.

#include "qbsim/dynamics.hpp"

#include "qbsim/errors.hpp"
#include "qbsim/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qb::dynamics {

TimeGrid TimeGrid::uniform(double t_max, std::size_t points) {
    if (points < 2 || !(t_max > 0.0))
        throw std::invalid_argument("TimeGrid::uniform: need t_max > 0 and >= 2 points");
    TimeGrid grid;
    grid.t_values.resize(points);
    for (std::size_t k = 0; k < points; ++k)
        grid.t_values[k] = t_max * static_cast<double>(k) / static_cast<double>(points - 1);
    grid.t_values.front() = 0.0;
    return grid;
}

void TimeGrid::validate() const {
    if (t_values.empty() || t_values.front() != 0.0)
        throw std::invalid_argument("TimeGrid: first point must be t = 0");
    for (std::size_t k = 1; k < t_values.size(); ++k)
        if (!(t_values[k] > t_values[k - 1]))
            throw std::invalid_argument("TimeGrid: t values must be strictly increasing");
}

TimeGrid default_grid() { return TimeGrid::uniform(10.0, 1001); }

Propagator prepare_propagator(const hamiltonian::SparseHermitian& h,
                              const hilbert::SectorDecomposition& sectors,
                              const hilbert::SpaceLayout& layout) {
    if (h.dim != layout.total_dim)
        throw std::invalid_argument("prepare_propagator: H dimension mismatch");
    for (const auto& e : h.entries)
        if (e.value.imag() != 0.0)
            throw std::invalid_argument(
                "prepare_propagator: complex-valued H not supported");

    // Basis index -> (sector, offset) for block extraction.
    std::vector<std::pair<int, Eigen::Index>> where(layout.total_dim, {-1, 0});
    for (std::size_t s = 0; s < sectors.sectors.size(); ++s) {
        const auto& idx = sectors.sectors[s].basis_indices;
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(idx.size()); ++k)
            where[idx[k]] = {static_cast<int>(s), k};
    }

    std::vector<Eigen::MatrixXd> blocks(sectors.sectors.size());
    for (std::size_t s = 0; s < sectors.sectors.size(); ++s) {
        auto m = static_cast<Eigen::Index>(sectors.sectors[s].basis_indices.size());
        blocks[s] = Eigen::MatrixXd::Zero(m, m);
    }
    for (const auto& e : h.entries) {
        auto [sr, r] = where[e.row];
        auto [sc, c] = where[e.col];
        if (sr != sc)
            throw InvariantViolation(
                "prepare_propagator: H couples different excitation sectors (" +
                std::to_string(e.row) + ", " + std::to_string(e.col) + ")");
        blocks[sr](r, c) += e.value.real();
        if (e.row != e.col) blocks[sr](c, r) += e.value.real();
    }

    Propagator prop;
    prop.layout = layout;
    prop.sectors.resize(sectors.sectors.size());
    parallel_for(sectors.sectors.size(), [&](std::size_t s) {
        Propagator::SectorBlock& out = prop.sectors[s];
        out.excitation = sectors.sectors[s].excitation;
        out.basis_indices = sectors.sectors[s].basis_indices;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(blocks[s]);
        if (es.info() != Eigen::Success)
            throw InvariantViolation("prepare_propagator: eigensolve failed in sector " +
                                     std::to_string(out.excitation));
        out.eigenvalues = es.eigenvalues();
        out.eigenvectors = es.eigenvectors();
        for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
            Eigen::Index imax = 0;
            out.eigenvectors.col(c).cwiseAbs().maxCoeff(&imax);
            if (out.eigenvectors(imax, c) < 0.0) out.eigenvectors.col(c) *= -1.0;
        }
    });
    return prop;
}

BoundState::BoundState(const Propagator& prop, const states::PureState& psi0)
    : prop_(&prop), psi0_(psi0.amplitudes) {
    if (psi0.layout.n_qubits != prop.layout.n_qubits ||
        psi0.layout.mode_cutoffs != prop.layout.mode_cutoffs)
        throw std::invalid_argument("BoundState: state layout does not match propagator");
    psi0.validate();
    proj_re_.resize(prop.sectors.size());
    proj_im_.resize(prop.sectors.size());
    for (std::size_t s = 0; s < prop.sectors.size(); ++s) {
        const auto& sec = prop.sectors[s];
        const auto m = static_cast<Eigen::Index>(sec.basis_indices.size());
        Eigen::VectorXd are(m), aim(m);
        for (Eigen::Index k = 0; k < m; ++k) {
            are(k) = psi0_(sec.basis_indices[k]).real();
            aim(k) = psi0_(sec.basis_indices[k]).imag();
        }
        proj_re_[s] = sec.eigenvectors.transpose() * are;
        proj_im_[s] = sec.eigenvectors.transpose() * aim;
    }
}

Eigen::VectorXcd BoundState::at(double t) const {
    if (t == 0.0) return psi0_;
    Eigen::VectorXcd psi(prop_->layout.total_dim);
    for (std::size_t s = 0; s < prop_->sectors.size(); ++s) {
        const auto& sec = prop_->sectors[s];
        const auto m = static_cast<Eigen::Index>(sec.basis_indices.size());
        Eigen::VectorXd cre(m), cim(m);
        for (Eigen::Index k = 0; k < m; ++k) {
            double c = std::cos(sec.eigenvalues(k) * t);
            double sn = std::sin(sec.eigenvalues(k) * t);
            // (re + i im) * exp(-i lambda t)
            cre(k) = proj_re_[s](k) * c + proj_im_[s](k) * sn;
            cim(k) = proj_im_[s](k) * c - proj_re_[s](k) * sn;
        }
        Eigen::VectorXd yre = sec.eigenvectors * cre;
        Eigen::VectorXd yim = sec.eigenvectors * cim;
        for (Eigen::Index k = 0; k < m; ++k)
            psi(sec.basis_indices[k]) = {yre(k), yim(k)};
    }
    return psi;
}

void BoundState::for_each_time(
    const std::vector<double>& t_values,
    const std::function<void(std::size_t, const Eigen::VectorXcd&)>& consumer,
    std::size_t block) const {
    if (block == 0) block = 1;
    const Eigen::Index dim = prop_->layout.total_dim;
    Eigen::MatrixXcd chunk;
    for (std::size_t k0 = 0; k0 < t_values.size(); k0 += block) {
        const auto width = static_cast<Eigen::Index>(
            std::min(block, t_values.size() - k0));
        chunk.resize(dim, width);
        for (const auto& sec : prop_->sectors) {
            const auto m = static_cast<Eigen::Index>(sec.basis_indices.size());
            const std::size_t s = static_cast<std::size_t>(&sec - prop_->sectors.data());
            Eigen::MatrixXd cre(m, width), cim(m, width);
            for (Eigen::Index j = 0; j < width; ++j) {
                const double t = t_values[k0 + j];
                for (Eigen::Index k = 0; k < m; ++k) {
                    double c = std::cos(sec.eigenvalues(k) * t);
                    double sn = std::sin(sec.eigenvalues(k) * t);
                    cre(k, j) = proj_re_[s](k) * c + proj_im_[s](k) * sn;
                    cim(k, j) = proj_im_[s](k) * c - proj_re_[s](k) * sn;
                }
            }
            Eigen::MatrixXd yre = sec.eigenvectors * cre;
            Eigen::MatrixXd yim = sec.eigenvectors * cim;
            for (Eigen::Index j = 0; j < width; ++j)
                for (Eigen::Index k = 0; k < m; ++k)
                    chunk(sec.basis_indices[k], j) = {yre(k, j), yim(k, j)};
        }
        for (Eigen::Index j = 0; j < width; ++j) {
            if (t_values[k0 + j] == 0.0)
                consumer(k0 + j, psi0_);
            else
                consumer(k0 + j, chunk.col(j));
        }
    }
}

states::PureState evolve(const Propagator& prop, const states::PureState& psi0,
                         double t) {
    BoundState bound(prop, psi0);
    states::PureState out{psi0.layout, bound.at(t)};
    double norm_err = std::abs(out.amplitudes.norm() - 1.0);
    if (norm_err > 1e-10)
        throw InvariantViolation("evolve: norm drifted by " + std::to_string(norm_err));
    return out;
}

std::vector<states::PureState> evolve_series(const Propagator& prop,
                                             const states::PureState& psi0,
                                             const TimeGrid& grid) {
    grid.validate();
    BoundState bound(prop, psi0);
    std::vector<states::PureState> out;
    out.reserve(grid.t_values.size());
    for (std::size_t k = 0; k < grid.t_values.size(); ++k)
        out.push_back({psi0.layout, Eigen::VectorXcd()});
    bound.for_each_time(grid.t_values, [&](std::size_t k, const Eigen::VectorXcd& psi) {
        out[k].amplitudes = psi;
    });
    return out;
}

Eigen::VectorXcd dense_oracle_evolve(const Eigen::MatrixXcd& h_dense,
                                     const Eigen::VectorXcd& psi0, double t,
                                     Eigen::Index dim_limit) {
    if (h_dense.rows() != h_dense.cols() || h_dense.rows() != psi0.size())
        throw std::invalid_argument("dense_oracle_evolve: dimension mismatch");
    if (h_dense.rows() > dim_limit)
        throw ResourceLimitError("dense_oracle_evolve: dimension " +
                                 std::to_string(h_dense.rows()) + " exceeds limit " +
                                 std::to_string(dim_limit));
    const std::complex<double> minus_i(0.0, -1.0);
    Eigen::MatrixXcd a = minus_i * t * h_dense;
    // Halve until each application stays inside a Taylor radius where the
    // series converges fast and unit-magnitude cancellation is mild.
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm > 2.0 && squarings < 34) {
        norm *= 0.5;
        ++squarings;
    }
    if (norm > 2.0)
        throw ResourceLimitError("dense_oracle_evolve: |t| * ||H|| too large");
    const double scale = std::ldexp(1.0, -squarings);
    Eigen::VectorXcd psi = psi0;
    const long reps = 1L << squarings;
    for (long r = 0; r < reps; ++r) {
        Eigen::VectorXcd term = psi;
        Eigen::VectorXcd sum = psi;
        for (int k = 1; k <= 60; ++k) {
            term = (a * term) * (scale / static_cast<double>(k));
            sum += term;
            if (term.norm() <= 1e-22 * sum.norm()) break;
        }
        psi = sum;
    }
    return psi;
}

} // namespace qb::dynamics
