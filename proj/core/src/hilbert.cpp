// hilbert.cpp — Basis indexing, excitation sectors, and partial traces.

#include "qbsim/hilbert.hpp"

#include "qbsim/errors.hpp"

#include <Eigen/Eigenvalues>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qb::hilbert {

int BasisState::total_excitation() const {
    int n = std::accumulate(occupations.begin(), occupations.end(), 0);
    for (int b : qubit_bits) n += b;
    return n;
}

Eigen::Index SpaceLayout::charger_dim() const {
    Eigen::Index d = 1;
    for (int c : mode_cutoffs) d *= static_cast<Eigen::Index>(c) + 1;
    return d;
}

SpaceLayout make_layout(int n_qubits, std::vector<int> mode_cutoffs) {
    if (n_qubits < 1)
        throw std::invalid_argument("make_layout: n_qubits must be >= 1, got " +
                                    std::to_string(n_qubits));
    if (mode_cutoffs.empty() || mode_cutoffs.size() > 2)
        throw std::invalid_argument("make_layout: expected 1 or 2 modes, got " +
                                    std::to_string(mode_cutoffs.size()));
    for (int c : mode_cutoffs)
        if (c < 0)
            throw std::invalid_argument("make_layout: mode cutoff must be >= 0, got " +
                                        std::to_string(c));
    SpaceLayout layout;
    layout.n_qubits = n_qubits;
    layout.mode_cutoffs = std::move(mode_cutoffs);
    layout.total_dim = layout.battery_dim() * layout.charger_dim();
    return layout;
}

Eigen::Index basis_index(const SpaceLayout& layout, const BasisState& state) {
    if (static_cast<int>(state.qubit_bits.size()) != layout.n_qubits)
        throw std::out_of_range("basis_index: qubit_bits size mismatch");
    if (static_cast<int>(state.occupations.size()) != layout.n_modes())
        throw std::out_of_range("basis_index: occupations size mismatch");
    Eigen::Index idx = 0;
    for (int q = 0; q < layout.n_qubits; ++q) {
        int b = state.qubit_bits[q];
        if (b != 0 && b != 1)
            throw std::out_of_range("basis_index: qubit bit must be 0 or 1");
        idx = idx * 2 + b;
    }
    for (int m = 0; m < layout.n_modes(); ++m) {
        int n = state.occupations[m];
        if (n < 0 || n > layout.mode_cutoffs[m])
            throw std::out_of_range("basis_index: occupation " + std::to_string(n) +
                                    " outside [0, " +
                                    std::to_string(layout.mode_cutoffs[m]) + "]");
        idx = idx * (layout.mode_cutoffs[m] + 1) + n;
    }
    return idx;
}

BasisState basis_state(const SpaceLayout& layout, Eigen::Index index) {
    if (index < 0 || index >= layout.total_dim)
        throw std::out_of_range("basis_state: index " + std::to_string(index) +
                                " outside [0, " + std::to_string(layout.total_dim) + ")");
    BasisState state;
    state.qubit_bits.resize(layout.n_qubits);
    state.occupations.resize(layout.n_modes());
    for (int m = layout.n_modes() - 1; m >= 0; --m) {
        Eigen::Index radix = layout.mode_cutoffs[m] + 1;
        state.occupations[m] = static_cast<int>(index % radix);
        index /= radix;
    }
    for (int q = layout.n_qubits - 1; q >= 0; --q) {
        state.qubit_bits[q] = static_cast<int>(index % 2);
        index /= 2;
    }
    return state;
}

int excitation_of(const SpaceLayout& layout, Eigen::Index index) {
    int n = 0;
    for (int m = layout.n_modes() - 1; m >= 0; --m) {
        Eigen::Index radix = layout.mode_cutoffs[m] + 1;
        n += static_cast<int>(index % radix);
        index /= radix;
    }
    while (index > 0) {
        n += static_cast<int>(index % 2);
        index /= 2;
    }
    return n;
}

SectorDecomposition build_sectors(const SpaceLayout& layout) {
    std::map<int, std::vector<Eigen::Index>> buckets;
    for (Eigen::Index i = 0; i < layout.total_dim; ++i)
        buckets[excitation_of(layout, i)].push_back(i);
    SectorDecomposition decomp;
    decomp.sectors.reserve(buckets.size());
    for (auto& [exc, indices] : buckets)
        decomp.sectors.push_back({exc, std::move(indices)});
    return decomp;
}

void DensityMatrix::validate() const {
    if (mat.rows() != mat.cols())
        throw InvariantViolation("density matrix is not square");
    double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12)
        throw InvariantViolation("density matrix not Hermitian: max |rho - rho^dag| = " +
                                 std::to_string(herm));
    double tr_err = std::abs(mat.trace() - std::complex<double>(1.0, 0.0));
    if (tr_err > 1e-10)
        throw InvariantViolation("density matrix trace deviates from 1 by " +
                                 std::to_string(tr_err));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (mat + mat.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -1e-10)
        throw InvariantViolation("density matrix has negative eigenvalue " +
                                 std::to_string(min_eig));
}

Eigen::MatrixXcd amplitude_matrix(const Eigen::VectorXcd& psi, const SpaceLayout& layout) {
    if (psi.size() != layout.total_dim)
        throw std::invalid_argument("amplitude_matrix: state size mismatch");
    using RowMajor = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>;
    return Eigen::Map<const RowMajor>(psi.data(), layout.battery_dim(),
                                      layout.charger_dim());
}

DensityMatrix partial_trace(const Eigen::VectorXcd& psi, const SpaceLayout& layout,
                            Subsystem keep) {
    Eigen::MatrixXcd m = amplitude_matrix(psi, layout);
    Eigen::MatrixXcd rho;
    if (keep == Subsystem::battery)
        rho = m * m.adjoint();
    else
        rho = (m.adjoint() * m).transpose();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix{std::move(rho)};
}

DensityMatrix partial_trace(const Eigen::MatrixXcd& rho, const SpaceLayout& layout,
                            Subsystem keep) {
    if (rho.rows() != layout.total_dim || rho.cols() != layout.total_dim)
        throw std::invalid_argument("partial_trace: density matrix size mismatch");
    const Eigen::Index db = layout.battery_dim();
    const Eigen::Index dc = layout.charger_dim();
    Eigen::MatrixXcd out;
    if (keep == Subsystem::battery) {
        out = Eigen::MatrixXcd::Zero(db, db);
        for (Eigen::Index b = 0; b < db; ++b)
            for (Eigen::Index bp = 0; bp < db; ++bp)
                for (Eigen::Index c = 0; c < dc; ++c)
                    out(b, bp) += rho(b * dc + c, bp * dc + c);
    } else {
        out = Eigen::MatrixXcd::Zero(dc, dc);
        for (Eigen::Index c = 0; c < dc; ++c)
            for (Eigen::Index cp = 0; cp < dc; ++cp)
                for (Eigen::Index b = 0; b < db; ++b)
                    out(c, cp) += rho(b * dc + c, b * dc + cp);
    }
    out = 0.5 * (out + out.adjoint()).eval();
    return DensityMatrix{std::move(out)};
}

} // namespace qb::hilbert
