#include "polarion/bogoliubov/bogoliubov.hpp"

#include <algorithm>
#include <cmath>

namespace polarion::bogoliubov {

void QuadraticHamiltonian::validate(double tol) const {
    if (a_mat.rows() != a_mat.cols() || b_mat.rows() != b_mat.cols() ||
        a_mat.rows() != b_mat.rows()) {
        throw ConfigError("QuadraticHamiltonian: A and B must be square of equal size");
    }
    double scale = std::max(a_mat.norm(), 1.0);
    if ((a_mat - a_mat.adjoint()).norm() > tol * scale) {
        throw ConfigError("QuadraticHamiltonian: A must be Hermitian");
    }
    if ((b_mat - b_mat.transpose()).norm() > tol * std::max(b_mat.norm(), 1.0)) {
        throw ConfigError("QuadraticHamiltonian: B must be symmetric");
    }
}

MatrixXc build_bdg(const QuadraticHamiltonian& h) {
    h.validate();
    const Eigen::Index n = h.size();
    MatrixXc bdg(2 * n, 2 * n);
    bdg.topLeftCorner(n, n) = h.a_mat;
    bdg.topRightCorner(n, n) = h.b_mat;
    bdg.bottomLeftCorner(n, n) = h.b_mat.adjoint();
    bdg.bottomRightCorner(n, n) = h.a_mat.transpose();
    return bdg;
}

BogoliubovTransform diagonalize_symplectic(const QuadraticHamiltonian& h) {
    const Eigen::Index n = h.size();
    MatrixXc bdg = build_bdg(h);
    MatrixXc k = bdg;
    k.bottomRows(n) *= -1.0;  // Sigma * H_BdG

    Eigen::ComplexEigenSolver<MatrixXc> es(k);
    if (es.info() != Eigen::Success) {
        throw NumericalError("diagonalize_symplectic: eigensolver failed");
    }

    constexpr double kStabilityTol = 1e-10;  // meV
    double scale = std::max(bdg.norm(), 1.0);

    struct Pair {
        double freq;
        VectorXc vec;
    };
    std::vector<Pair> positive;
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
        cplx lam = es.eigenvalues()[i];
        if (std::abs(lam.imag()) > 1e-8 * scale) {
            throw UnstableHamiltonian(
                "diagonalize_symplectic: complex symplectic eigenvalue (dynamical instability)");
        }
        if (lam.real() <= kStabilityTol) continue;
        VectorXc w = es.eigenvectors().col(i);
        // symplectic norm w^dag Sigma w must be positive for this branch
        double snorm = w.head(n).squaredNorm() - w.tail(n).squaredNorm();
        if (snorm <= 0.0) continue;
        w /= std::sqrt(snorm);
        // phase gauge: largest-|u| component real positive
        Eigen::Index imax = 0;
        w.head(n).cwiseAbs().maxCoeff(&imax);
        cplx ph = w[imax] / std::abs(w[imax]);
        w /= ph;
        positive.push_back({lam.real(), std::move(w)});
    }
    if (static_cast<Eigen::Index>(positive.size()) != n) {
        throw UnstableHamiltonian(
            "diagonalize_symplectic: symplectic spectrum is not strictly positive");
    }
    std::sort(positive.begin(), positive.end(),
              [](const Pair& a, const Pair& b) { return a.freq < b.freq; });

    BogoliubovTransform t;
    t.u.resize(n, n);
    t.v.resize(n, n);
    t.freqs.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        t.freqs[j] = positive[j].freq;
        t.u.col(j) = positive[j].vec.head(n);
        t.v.col(j) = positive[j].vec.tail(n).conjugate();
    }
    return t;
}

MatrixXc reconstruct_bdg(const BogoliubovTransform& t) {
    const Eigen::Index n = t.u.rows();
    MatrixXc s(2 * n, 2 * n);
    s.topLeftCorner(n, n) = t.u;
    s.topRightCorner(n, n) = t.v;
    s.bottomLeftCorner(n, n) = t.v.conjugate();
    s.bottomRightCorner(n, n) = t.u.conjugate();
    Eigen::VectorXd d(2 * n);
    d.head(n) = t.freqs;
    d.tail(n) = t.freqs;
    MatrixXc m = s * d.asDiagonal() * s.adjoint();
    m.topRightCorner(n, n) *= -1.0;
    m.bottomLeftCorner(n, n) *= -1.0;
    // Sigma S diag S^dag Sigma flips the sign of the off-diagonal blocks
    return m;
}

QuadraticHamiltonian hopfield_hamiltonian(double k, const maxwell::LorentzMedium& m) {
    m.validate();
    const double e_c = k * units::hbar_c / std::sqrt(m.eps_b);  // photon energy
    const double w0 = m.omega0;
    const double rabi = m.alpha / std::sqrt(m.rho * m.eps_b);
    QuadraticHamiltonian h;
    h.a_mat = MatrixXc::Zero(2, 2);
    h.b_mat = MatrixXc::Zero(2, 2);
    if (m.alpha == 0.0 || e_c == 0.0) {
        h.a_mat(0, 0) = e_c;
        h.a_mat(1, 1) = w0;
        return h;
    }
    // From H_EM + H_X + H_EM-X with A, X expanded in the bare mode operators:
    //   coupling   i*lam (b - b^dag)(a + a^dag),  lam = (rabi/2) sqrt(w0 / e_c)
    //   diamagnetic D (a + a^dag)^2,              D   = rabi^2 / (4 e_c)
    const double lam = 0.5 * rabi * std::sqrt(w0 / e_c);
    const double dia = rabi * rabi / (4.0 * e_c);
    h.a_mat(0, 0) = e_c + 2.0 * dia;
    h.a_mat(1, 1) = w0;
    h.a_mat(0, 1) = cplx(0.0, lam);   // a^dag b
    h.a_mat(1, 0) = cplx(0.0, -lam);  // b^dag a
    h.b_mat(0, 0) = 2.0 * dia;
    h.b_mat(0, 1) = cplx(0.0, -lam);
    h.b_mat(1, 0) = cplx(0.0, -lam);
    return h;
}

std::vector<cplx> polariton_projection(const std::vector<maxwell::QnmMode>& modes,
                                       const std::vector<cplx>& e_field,
                                       const std::vector<cplx>& x_field,
                                       const maxwell::LayerStack& stack) {
    std::vector<cplx> amps;
    amps.reserve(modes.size());
    for (const auto& mode : modes) {
        if (mode.size() != e_field.size() || mode.size() != x_field.size()) {
            throw GridMismatch("polariton_projection: field not sampled on the mode grid");
        }
        cplx acc = 0.0;
        const std::size_t n = mode.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& med = stack.medium_at(mode.z_at(i));
            double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
            cplx term = med.eps_b * e_field[i] * std::conj(mode.e_profile[i]);
            if (med.coupled()) {
                term += med.rho * med.omega0 * med.omega0 * x_field[i] *
                        std::conj(mode.x_profile[i]);
            }
            acc += w * term;
        }
        amps.push_back(acc * mode.dz / mode.norm);
    }
    return amps;
}

}  // namespace polarion::bogoliubov
