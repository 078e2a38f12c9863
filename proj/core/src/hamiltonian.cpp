// hamiltonian.cpp — Sparse assembly of the battery-charger Hamiltonian.

#include "qbsim/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qb::hamiltonian {

ModelConfig ModelConfig::resonant(int n_qubits, std::vector<int> mode_cutoffs,
                                  double omega0) {
    ModelConfig config;
    config.omega0 = omega0;
    config.g = 2.0 * omega0;
    config.n_qubits = n_qubits;
    config.omega_mode.assign(mode_cutoffs.size(), omega0);
    config.mode_cutoffs = std::move(mode_cutoffs);
    return config;
}

hilbert::SpaceLayout ModelConfig::layout() const {
    return hilbert::make_layout(n_qubits, mode_cutoffs);
}

void ModelConfig::validate() const {
    if (!(omega0 > 0.0))
        throw std::invalid_argument("ModelConfig: omega0 must be > 0");
    if (omega_mode.size() != mode_cutoffs.size())
        throw std::invalid_argument("ModelConfig: omega_mode length " +
                                    std::to_string(omega_mode.size()) +
                                    " does not match " +
                                    std::to_string(mode_cutoffs.size()) + " modes");
}

Eigen::MatrixXcd SparseHermitian::dense() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const Entry& e : entries) {
        m(e.row, e.col) += e.value;
        if (e.row != e.col) m(e.col, e.row) += std::conj(e.value);
    }
    return m;
}

Eigen::VectorXcd SparseHermitian::apply(const Eigen::VectorXcd& x) const {
    if (x.size() != dim)
        throw std::invalid_argument("SparseHermitian::apply: size mismatch");
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dim);
    for (const Entry& e : entries) {
        y(e.row) += e.value * x(e.col);
        if (e.row != e.col) y(e.col) += std::conj(e.value) * x(e.row);
    }
    return y;
}

double SparseHermitian::expectation(const Eigen::VectorXcd& psi) const {
    return psi.dot(apply(psi)).real();
}

double SparseHermitian::inf_norm() const {
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(dim);
    for (const Entry& e : entries) {
        double a = std::abs(e.value);
        row_sums(e.row) += a;
        if (e.row != e.col) row_sums(e.col) += a;
    }
    return dim == 0 ? 0.0 : row_sums.maxCoeff();
}

bool SparseHermitian::is_diagonal() const {
    for (const Entry& e : entries)
        if (e.row != e.col && std::abs(e.value) != 0.0) return false;
    return true;
}

SparseHermitian build_total_hamiltonian(const ModelConfig& config,
                                        const hilbert::SpaceLayout& layout) {
    config.validate();
    if (config.n_qubits != layout.n_qubits || config.mode_cutoffs != layout.mode_cutoffs)
        throw std::invalid_argument("build_total_hamiltonian: config/layout mismatch");

    const int nq = layout.n_qubits;
    const int nm = layout.n_modes();
    const Eigen::Index dc = layout.charger_dim();

    // Index stride of raising mode j by one photon.
    std::vector<Eigen::Index> mode_stride(nm, 1);
    for (int j = nm - 2; j >= 0; --j)
        mode_stride[j] = mode_stride[j + 1] * (layout.mode_cutoffs[j + 1] + 1);

    SparseHermitian h;
    h.dim = layout.total_dim;
    h.entries.reserve(static_cast<std::size_t>(layout.total_dim) * (1 + nq * nm));

    for (Eigen::Index s = 0; s < layout.total_dim; ++s) {
        hilbert::BasisState b = hilbert::basis_state(layout, s);
        double diag = 0.0;
        for (int q = 0; q < nq; ++q)
            diag += 0.5 * config.omega0 * (b.qubit_bits[q] ? 1.0 : -1.0);
        for (int j = 0; j < nm; ++j)
            diag += config.omega_mode[j] * b.occupations[j];
        h.entries.push_back({s, s, diag});

        // Exchange pairs, enumerated once from the excited-qubit side; the
        // partner (qubit ground, one more photon) always has a lower index.
        for (int q = 0; q < nq; ++q) {
            if (!b.qubit_bits[q]) continue;
            const Eigen::Index qubit_stride = (Eigen::Index(1) << (nq - 1 - q)) * dc;
            for (int j = 0; j < nm; ++j) {
                int n = b.occupations[j];
                if (n >= layout.mode_cutoffs[j]) continue;
                Eigen::Index partner = s - qubit_stride + mode_stride[j];
                h.entries.push_back(
                    {partner, s, config.g * std::sqrt(static_cast<double>(n + 1))});
            }
        }
    }
    return h;
}

SparseHermitian build_battery_hamiltonian(int n_qubits, double omega0) {
    if (n_qubits < 1)
        throw std::invalid_argument("build_battery_hamiltonian: n_qubits must be >= 1");
    SparseHermitian h;
    h.dim = Eigen::Index(1) << n_qubits;
    h.entries.reserve(h.dim);
    for (Eigen::Index s = 0; s < h.dim; ++s) {
        int excited = 0;
        for (Eigen::Index bits = s; bits > 0; bits >>= 1) excited += bits & 1;
        h.entries.push_back({s, s, omega0 * (excited - 0.5 * n_qubits)});
    }
    return h;
}

} // namespace qb::hamiltonian
