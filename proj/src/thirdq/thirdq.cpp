#include "polarion/thirdq/thirdq.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polarion::thirdq {

void QuadraticLiouvillian::validate() const {
    hamiltonian.validate();
    for (const auto& j : jumps) {
        j.validate();
        if (j.loss_coeffs.size() != n_modes()) {
            throw ConfigError("QuadraticLiouvillian: jump coefficient length != mode count");
        }
    }
}

namespace {

// Stacked commutator-structure vectors of a channel on v = (a, a^dag):
//   kappa:  L = kappa . v
//   kappap: L^dag = kappap . v
//   phi_i  = [v_i, L]
//   psi_i  = [L^dag, v_i]
struct ChannelVectors {
    VectorXc kappa, kappap, phi, psi;
};

ChannelVectors channel_vectors(const LinearJumpOperator& j) {
    const Eigen::Index n = j.loss_coeffs.size();
    ChannelVectors c;
    c.kappa.resize(2 * n);
    c.kappap.resize(2 * n);
    c.phi.resize(2 * n);
    c.psi.resize(2 * n);
    c.kappa << j.loss_coeffs, j.gain_coeffs;
    c.kappap << j.gain_coeffs.conjugate(), j.loss_coeffs.conjugate();
    c.phi << j.gain_coeffs, -j.loss_coeffs;
    c.psi << -j.loss_coeffs.conjugate(), j.gain_coeffs.conjugate();
    return c;
}

MatrixXc hamiltonian_drift(const bogoliubov::QuadraticHamiltonian& h) {
    const Eigen::Index n = h.size();
    MatrixXc m(2 * n, 2 * n);
    const cplx mi(0.0, -1.0);
    m.topLeftCorner(n, n) = mi * h.a_mat;
    m.topRightCorner(n, n) = mi * h.b_mat;
    m.bottomLeftCorner(n, n) = (mi * h.b_mat).conjugate();
    m.bottomRightCorner(n, n) = (mi * h.a_mat).conjugate();
    return m;
}

MatrixXc commutator_form(Eigen::Index n) {
    MatrixXc omega_c = MatrixXc::Zero(2 * n, 2 * n);
    omega_c.topRightCorner(n, n) = MatrixXc::Identity(n, n);
    omega_c.bottomLeftCorner(n, n) = -MatrixXc::Identity(n, n);
    return omega_c;
}

}  // namespace

MatrixXc build_drift_matrix(const QuadraticLiouvillian& liouv) {
    liouv.validate();
    const Eigen::Index n = liouv.n_modes();
    MatrixXc m = hamiltonian_drift(liouv.hamiltonian);
    for (const auto& j : liouv.jumps) {
        auto c = channel_vectors(j);
        m += 0.5 * j.rate *
             (c.phi * c.kappap.transpose() + c.psi * c.kappa.transpose());
    }
    (void)n;
    return m;
}

RapiditySpectrum rapidities(const MatrixXc& drift) {
    const Eigen::Index two_n = drift.rows();
    const Eigen::Index n = two_n / 2;
    Eigen::ComplexEigenSolver<MatrixXc> es(drift);
    if (es.info() != Eigen::Success) throw NumericalError("rapidities: eigensolver failed");

    double scale = std::max(drift.norm(), 1e-12);
    for (Eigen::Index i = 0; i < two_n; ++i) {
        if (es.eigenvalues()[i].real() >= 0.0) {
            throw NumericalError("rapidities: drift matrix is not stable");
        }
    }

    struct Entry {
        cplx omega;
        VectorXc vec;
    };
    std::vector<Entry> pos;
    std::vector<cplx> all;
    for (Eigen::Index i = 0; i < two_n; ++i) {
        cplx lambda = es.eigenvalues()[i];
        cplx omega = cplx(0.0, 1.0) * lambda;  // omega_r = i lambda_r
        all.push_back(omega);
        if (omega.real() > 0.0) pos.push_back({omega, es.eigenvectors().col(i)});
    }
    if (static_cast<Eigen::Index>(pos.size()) != n) {
        throw NumericalError("rapidities: could not select N representatives with Re > 0");
    }
    // conjugate partners must be present: multiset closed under w -> -conj(w)
    for (const Entry& e : pos) {
        cplx w = e.omega;
        bool ok = false;
        for (cplx w2 : all) {
            if (std::abs(w2 - (-std::conj(w))) < 1e-8 * scale) ok = true;
        }
        if (!ok) throw NumericalError("rapidities: conjugate partner missing in spectrum");
    }

    std::sort(pos.begin(), pos.end(),
              [](const Entry& a, const Entry& b) { return a.omega.real() < b.omega.real(); });

    RapiditySpectrum spec;
    for (std::size_t r = 0; r < pos.size(); ++r) {
        for (std::size_t s = r + 1; s < pos.size(); ++s) {
            if (std::abs(pos[r].omega - pos[s].omega) < 1e-9 * scale) {
                spec.degenerate_warning = true;  // Gram-Schmidt below keeps vectors independent
            }
        }
    }
    for (auto& e : pos) {
        VectorXc c = e.vec.head(n);
        VectorXc d = e.vec.tail(n);
        double pairing = c.squaredNorm() - d.squaredNorm();
        if (pairing > 1e-12) {
            double s = 1.0 / std::sqrt(pairing);
            c *= s;
            d *= s;
        } else {
            // strongly squeezed channel: fall back to unit max component
            Eigen::Index imax = 0;
            double cm = c.cwiseAbs().maxCoeff(&imax);
            Eigen::Index jmax = 0;
            double dm = d.cwiseAbs().maxCoeff(&jmax);
            cplx piv = (cm >= dm) ? c[imax] : d[jmax];
            c /= piv;
            d /= piv;
        }
        // phase gauge: largest |c| component real positive
        Eigen::Index imax = 0;
        c.cwiseAbs().maxCoeff(&imax);
        if (std::abs(c[imax]) > 0.0) {
            cplx ph = c[imax] / std::abs(c[imax]);
            c /= ph;
            d /= ph;
        }
        spec.omegas.push_back(e.omega);
        spec.c_coeffs.push_back(std::move(c));
        spec.d_coeffs.push_back(std::move(d));
    }
    return spec;
}

std::vector<cplx> RapiditySpectrum::full_set() const {
    std::vector<cplx> out = omegas;
    for (cplx w : omegas) out.push_back(-std::conj(w));
    return out;
}

std::vector<GklsRecord> diagonal_master_equation(const RapiditySpectrum& spec) {
    std::vector<GklsRecord> recs;
    recs.reserve(spec.omegas.size());
    for (cplx w : spec.omegas) recs.push_back({w.real(), w.imag()});
    return recs;
}

std::string render_gkls_record(const GklsRecord& rec, int index) {
    std::ostringstream os;
    os << "mode " << index << ": drho/dt = i*" << rec.re_omega << "*[rho, b'b]"
       << " + " << -rec.im_omega << "*(2 b rho b' - {b'b, rho})"
       << "   (omega = " << rec.re_omega << " meV, rate = " << rec.rate() << " meV)";
    return os.str();
}

MatrixXc ness_covariance(const QuadraticLiouvillian& liouv) {
    liouv.validate();
    const Eigen::Index n = liouv.n_modes();
    const Eigen::Index m2 = 2 * n;
    MatrixXc drift = build_drift_matrix(liouv);
    MatrixXc omega_c = commutator_form(n);
    MatrixXc m_h = hamiltonian_drift(liouv.hamiltonian);

    // constant (noise) term of the symmetric-moment equation
    MatrixXc d = 0.5 * (m_h * omega_c + omega_c * m_h.transpose());
    for (const auto& j : liouv.jumps) {
        auto c = channel_vectors(j);
        VectorXc sig0 = 0.5 * (omega_c * c.kappa);
        VectorXc sig0p = -0.5 * (omega_c * c.kappap);
        d += 0.5 * j.rate *
             (c.phi * sig0p.transpose() + sig0p * c.phi.transpose() +
              c.psi * sig0.transpose() + sig0 * c.psi.transpose());
    }

    // vec(M T + T M^T) = (I kron M + M kron I) vec(T)
    MatrixXc big = MatrixXc::Zero(m2 * m2, m2 * m2);
    for (Eigen::Index i = 0; i < m2; ++i) {
        for (Eigen::Index j = 0; j < m2; ++j) {
            for (Eigen::Index k = 0; k < m2; ++k) {
                big(j * m2 + i, j * m2 + k) += drift(i, k);
                big(j * m2 + i, k * m2 + i) += drift(j, k);
            }
        }
    }
    Eigen::VectorXcd rhs = -Eigen::Map<Eigen::VectorXcd>(d.data(), m2 * m2);
    Eigen::FullPivLU<MatrixXc> lu(big);
    if (!lu.isInvertible()) {
        throw LyapunovSingular("ness_covariance: Lyapunov operator is singular (marginal stability)");
    }
    Eigen::VectorXcd sol = lu.solve(rhs);
    MatrixXc t = Eigen::Map<MatrixXc>(sol.data(), m2, m2);
    return 0.5 * (t + t.transpose().eval());
}

MatrixXc ness_occupation(const QuadraticLiouvillian& liouv) {
    const Eigen::Index n = liouv.n_modes();
    MatrixXc t = ness_covariance(liouv);
    // <a_i^dag a_j> = T_{n+i, j} - delta_ij / 2
    MatrixXc occ(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            occ(i, j) = t(n + i, j) - (i == j ? 0.5 : 0.0);
        }
    }
    return occ;
}

}  // namespace polarion::thirdq
