// metrics.cpp — Energy, ergotropy, correlation, and coherence measures.

#include "qbsim/metrics.hpp"

#include "qbsim/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qb::metrics {

namespace {

void require_hermitian(const Eigen::MatrixXcd& m, const char* who) {
    if (m.rows() != m.cols() ||
        (m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
}

double clamp_eigenvalue(double lambda, const char* who) {
    if (lambda < -1e-10)
        throw InvariantViolation(std::string(who) + ": eigenvalue " +
                                 std::to_string(lambda) + " below -1e-10");
    return lambda < 0.0 ? 0.0 : lambda;
}

int qubit_count_of_dim(Eigen::Index dim, const char* who) {
    int n = 0;
    while ((Eigen::Index(1) << n) < dim) ++n;
    if ((Eigen::Index(1) << n) != dim || dim < 2)
        throw std::invalid_argument(std::string(who) +
                                    ": dimension is not a power of two");
    return n;
}

// Reduced 2x2 state of one qubit (bit position counted from the most
// significant side, matching the global basis convention).
Eigen::Matrix2cd single_qubit_reduced(const Eigen::MatrixXcd& rho, int n_qubits,
                                      int qubit) {
    const Eigen::Index dim = rho.rows();
    const Eigen::Index bit = Eigen::Index(1) << (n_qubits - 1 - qubit);
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    for (Eigen::Index x = 0; x < dim; ++x) {
        const Eigen::Index rest = x & ~bit;
        const int a = (x & bit) ? 1 : 0;
        for (int b = 0; b < 2; ++b) {
            const Eigen::Index y = rest | (b ? bit : 0);
            out(a, b) += rho(x, y);
        }
    }
    return 0.5 * (out + out.adjoint()).eval();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double consonance_of_transformed(const Eigen::MatrixXcd& rho,
                                 const std::vector<Eigen::Matrix2cd>& unitaries) {
    Eigen::MatrixXcd u = unitaries[0];
    for (std::size_t m = 1; m < unitaries.size(); ++m) u = kron(u, unitaries[m]);
    Eigen::MatrixXcd rho_c = u * rho * u.adjoint();
    const Eigen::Index dim = rho.rows();
    double sum = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k)
        sum += std::abs(rho_c(k, (dim - 1) ^ k));
    return sum;
}

Eigen::Matrix2cd haar_unitary_2x2(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Matrix2cd g;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g(i, j) = {gauss(rng), gauss(rng)};
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < 2; ++j) {
        std::complex<double> d = r(j, j);
        q.col(j) *= std::abs(d) > 0.0 ? d / std::abs(d) : 1.0;
    }
    return q;
}

} // namespace

Spectrum spectral_decomposition(const hilbert::DensityMatrix& rho) {
    require_hermitian(rho.mat, "spectral_decomposition");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat);
    if (es.info() != Eigen::Success)
        throw InvariantViolation("spectral_decomposition: eigensolve failed");
    Spectrum out;
    out.eigenvalues = es.eigenvalues().reverse();
    out.eigenvectors = es.eigenvectors().rowwise().reverse();
    return out;
}

EnergyLevels battery_levels(const hamiltonian::SparseHermitian& h) {
    EnergyLevels out;
    if (h.is_diagonal()) {
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(h.dim);
        for (const auto& e : h.entries)
            if (e.row == e.col) diag(e.row) += e.value.real();
        std::vector<Eigen::Index> order(h.dim);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return diag(a) < diag(b); });
        out.energies.resize(h.dim);
        out.eigenvectors = Eigen::MatrixXcd::Zero(h.dim, h.dim);
        for (Eigen::Index j = 0; j < h.dim; ++j) {
            out.energies(j) = diag(order[j]);
            out.eigenvectors(order[j], j) = 1.0;
        }
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.dense());
    if (es.info() != Eigen::Success)
        throw InvariantViolation("battery_levels: eigensolve failed");
    out.energies = es.eigenvalues();
    out.eigenvectors = es.eigenvectors();
    return out;
}

double trace_product(const hilbert::DensityMatrix& rho,
                     const hamiltonian::SparseHermitian& h) {
    if (rho.dim() != h.dim)
        throw std::invalid_argument("trace_product: dimension mismatch");
    std::complex<double> sum = 0.0;
    for (const auto& e : h.entries) {
        sum += rho.mat(e.col, e.row) * e.value;
        if (e.row != e.col) sum += rho.mat(e.row, e.col) * std::conj(e.value);
    }
    return sum.real();
}

double stored_energy(const hilbert::DensityMatrix& rho_b,
                     const hamiltonian::SparseHermitian& h_b) {
    require_hermitian(rho_b.mat, "stored_energy");
    EnergyLevels levels = battery_levels(h_b);
    return trace_product(rho_b, h_b) - levels.energies(0);
}

double ergotropy_from_parts(const Spectrum& rho_spectrum, const EnergyLevels& levels) {
    const Eigen::Index n = rho_spectrum.eigenvalues.size();
    if (levels.energies.size() != n)
        throw std::invalid_argument("ergotropy_from_parts: dimension mismatch");
    Eigen::MatrixXcd overlap = rho_spectrum.eigenvectors.adjoint() * levels.eigenvectors;
    double value = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            double weight = std::norm(overlap(i, j)) - (i == j ? 1.0 : 0.0);
            value += rho_spectrum.eigenvalues(i) * levels.energies(j) * weight;
        }
    if (value < -1e-10)
        throw InvariantViolation("ergotropy: negative value " + std::to_string(value));
    return value < 0.0 ? 0.0 : value;
}

double ergotropy(const hilbert::DensityMatrix& rho_b,
                 const hamiltonian::SparseHermitian& h_b) {
    return ergotropy_from_parts(spectral_decomposition(rho_b), battery_levels(h_b));
}

PassiveState passive_state(const hilbert::DensityMatrix& rho_b,
                           const hamiltonian::SparseHermitian& h_b) {
    Spectrum spectrum = spectral_decomposition(rho_b);
    EnergyLevels levels = battery_levels(h_b);
    PassiveState out;
    out.energies = levels.energies;
    out.populations = spectrum.eigenvalues;  // descending onto ascending energies
    return out;
}

double ergotropy_via_passive(const hilbert::DensityMatrix& rho_b,
                             const hamiltonian::SparseHermitian& h_b) {
    PassiveState eta = passive_state(rho_b, h_b);
    return trace_product(rho_b, h_b) - eta.energy();
}

double charging_power(double delta_e, double t) {
    if (t < 0.0) throw std::invalid_argument("charging_power: negative time");
    return t == 0.0 ? 0.0 : delta_e / t;
}

double purity(const hilbert::DensityMatrix& rho) {
    require_hermitian(rho.mat, "purity");
    return rho.mat.squaredNorm();
}

double entropy_of_eigenvalues(const Eigen::VectorXd& eigenvalues, double floor) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
        double lambda = clamp_eigenvalue(eigenvalues(i), "entropy");
        if (lambda > floor) s -= lambda * std::log2(lambda);
    }
    return s < 0.0 ? 0.0 : s;
}

double von_neumann_entropy(const hilbert::DensityMatrix& rho, double floor) {
    require_hermitian(rho.mat, "von_neumann_entropy");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat,
                                                       Eigen::EigenvaluesOnly);
    return entropy_of_eigenvalues(es.eigenvalues(), floor);
}

double charger_entropy_schmidt(const Eigen::VectorXcd& psi,
                               const hilbert::SpaceLayout& layout, double floor) {
    Eigen::MatrixXcd m = hilbert::amplitude_matrix(psi, layout);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    Eigen::VectorXd schmidt = svd.singularValues().array().square();
    return entropy_of_eigenvalues(schmidt, floor);
}

double mutual_information(double s_b, double s_c, double s_bc) {
    if (s_b < -1e-12 || s_c < -1e-12 || s_bc < -1e-12)
        throw std::invalid_argument("mutual_information: negative entropy input");
    return s_b + s_c - s_bc;
}

std::vector<Eigen::Matrix2cd> local_decohering_unitaries(
    const hilbert::DensityMatrix& rho_b, double degeneracy_tol) {
    require_hermitian(rho_b.mat, "local_decohering_unitaries");
    const int n = qubit_count_of_dim(rho_b.dim(), "local_decohering_unitaries");
    std::vector<Eigen::Matrix2cd> out(n);
    for (int m = 0; m < n; ++m) {
        Eigen::Matrix2cd reduced = single_qubit_reduced(rho_b.mat, n, m);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(reduced);
        if (std::abs(es.eigenvalues()(1) - es.eigenvalues()(0)) <= degeneracy_tol) {
            out[m] = Eigen::Matrix2cd::Identity();
            continue;
        }
        Eigen::Matrix2cd w = es.eigenvectors();
        // Column closest to |0> first, then |1>; fix phases to real positive
        // at the largest component.
        if (std::norm(w(0, 0)) < std::norm(w(0, 1))) w.col(0).swap(w.col(1));
        for (int c = 0; c < 2; ++c) {
            int imax = std::norm(w(0, c)) >= std::norm(w(1, c)) ? 0 : 1;
            std::complex<double> z = w(imax, c);
            if (std::abs(z) > 0.0) w.col(c) *= std::conj(z) / std::abs(z);
        }
        out[m] = w.adjoint();
        Eigen::Matrix2cd check = out[m] * reduced * out[m].adjoint();
        if (std::abs(check(0, 1)) > 1e-10)
            throw InvariantViolation(
                "local_decohering_unitaries: residual local coherence");
    }
    return out;
}

double quantum_consonance(const hilbert::DensityMatrix& rho_b) {
    const int n = qubit_count_of_dim(rho_b.dim(), "quantum_consonance");
    if (n == 1) return 0.0;
    return consonance_of_transformed(rho_b.mat, local_decohering_unitaries(rho_b));
}

ConsonanceSensitivity consonance_degeneracy_sensitivity(
    const hilbert::DensityMatrix& rho_b, int samples, std::uint64_t seed,
    double degeneracy_tol) {
    const int n = qubit_count_of_dim(rho_b.dim(), "consonance_degeneracy_sensitivity");
    ConsonanceSensitivity out{};
    out.value = quantum_consonance(rho_b);
    out.min = out.max = out.value;
    if (n == 1 || samples <= 0) return out;

    std::vector<Eigen::Matrix2cd> unitaries = local_decohering_unitaries(rho_b,
                                                                         degeneracy_tol);
    std::vector<int> degenerate;
    for (int m = 0; m < n; ++m) {
        Eigen::Matrix2cd reduced = single_qubit_reduced(rho_b.mat, n, m);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(reduced);
        if (std::abs(es.eigenvalues()(1) - es.eigenvalues()(0)) <= degeneracy_tol)
            degenerate.push_back(m);
    }
    if (degenerate.empty()) return out;

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<Eigen::Matrix2cd> sampled = unitaries;
        for (int m : degenerate) sampled[m] = haar_unitary_2x2(rng);
        double value = consonance_of_transformed(rho_b.mat, sampled);
        out.min = std::min(out.min, value);
        out.max = std::max(out.max, value);
    }
    return out;
}

double extractable_ratio(double ergotropy_value, double delta_e, double floor) {
    if (!(delta_e > floor)) return std::numeric_limits<double>::quiet_NaN();
    double ratio = ergotropy_value / delta_e;
    if (ratio < -1e-8 || ratio > 1.0 + 1e-8)
        throw InvariantViolation("extractable_ratio: " + std::to_string(ratio) +
                                 " outside [0, 1]");
    return std::clamp(ratio, 0.0, 1.0);
}

BatteryReference BatteryReference::make(int n_qubits, double omega0) {
    BatteryReference ref;
    ref.h = hamiltonian::build_battery_hamiltonian(n_qubits, omega0);
    ref.levels = battery_levels(ref.h);
    ref.ground_energy = ref.levels.energies(0);
    ref.capacity = ref.levels.energies(ref.levels.energies.size() - 1) -
                   ref.ground_energy;
    return ref;
}

MetricsRecord evaluate_record(const Eigen::VectorXcd& psi,
                              const hilbert::SpaceLayout& layout,
                              const BatteryReference& battery, double t) {
    const double scale = std::max(1.0, battery.capacity);
    double norm_err = std::abs(psi.norm() - 1.0);
    if (norm_err > 1e-10)
        throw InvariantViolation("evaluate_record: state norm deviates by " +
                                 std::to_string(norm_err) + " at t = " +
                                 std::to_string(t));

    hilbert::DensityMatrix rho_b = hilbert::partial_trace(psi, layout,
                                                          hilbert::Subsystem::battery);
    Spectrum spectrum = spectral_decomposition(rho_b);

    MetricsRecord r;
    r.t = t;
    r.energy = trace_product(rho_b, battery.h) - battery.ground_energy;
    r.ergotropy = ergotropy_from_parts(spectrum, battery.levels);
    double via_passive = trace_product(rho_b, battery.h) -
                         spectrum.eigenvalues.dot(battery.levels.energies);
    if (std::abs(r.ergotropy - std::max(0.0, via_passive)) > 1e-10 * scale)
        throw InvariantViolation("evaluate_record: ergotropy routes disagree by " +
                                 std::to_string(r.ergotropy - via_passive));
    r.power = charging_power(r.energy, t);
    r.purity = purity(rho_b);
    r.entropy = entropy_of_eigenvalues(spectrum.eigenvalues);
    r.charger_entropy = charger_entropy_schmidt(psi, layout);
    r.mutual_info = mutual_information(r.entropy, r.charger_entropy, 0.0);
    r.consonance = quantum_consonance(rho_b);
    r.gamma = extractable_ratio(r.ergotropy, r.energy, 1e-9 * scale);

    const double tol = 1e-8 * scale;
    if (r.energy < -tol || r.ergotropy > r.energy + tol)
        throw InvariantViolation("evaluate_record: ergotropy/energy ordering violated");
    double purity_min = 1.0 / static_cast<double>(layout.battery_dim());
    if (r.purity < purity_min - 1e-10 || r.purity > 1.0 + 1e-10)
        throw InvariantViolation("evaluate_record: purity outside range");
    if (r.entropy < 0.0 || r.charger_entropy < 0.0)
        throw InvariantViolation("evaluate_record: negative entropy");
    return r;
}

} // namespace qb::metrics
