#include "polarion/thirdq/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "polarion/numerics/arnoldi.hpp"
#include "polarion/thirdq/fock.hpp"

namespace polarion::thirdq {

namespace {

cplx pick_shift(const SparseC& liou) {
    // small offset away from the NESS zero eigenvalue, scaled to the matrix
    double scale = 0.0;
    for (int k = 0; k < liou.outerSize(); ++k) {
        for (SparseC::InnerIterator it(liou, k); it; ++it) {
            if (it.row() == it.col()) scale = std::max(scale, std::abs(it.value()));
        }
    }
    scale = std::max(scale, 1e-6);
    return cplx(1e-5 * scale, 1e-5 * scale);
}

// Taylor-series action of exp(L t) on x with sub-stepping.
VectorXc expm_action(const SparseC& liou, VectorXc x, double t, double norm_est) {
    if (t == 0.0) return x;
    int steps = std::max(1, static_cast<int>(std::ceil(norm_est * std::abs(t) / 8.0)));
    double dt = t / steps;
    for (int s = 0; s < steps; ++s) {
        VectorXc term = x;
        VectorXc acc = x;
        for (int k = 1; k < 60; ++k) {
            term = (liou * term) * (dt / k);
            acc += term;
            if (term.norm() < 1e-16 * std::max(acc.norm(), 1e-300)) break;
        }
        x = std::move(acc);
    }
    return x;
}

double one_norm_estimate(const SparseC& m) {
    Eigen::VectorXd col_sums = Eigen::VectorXd::Zero(m.cols());
    for (int k = 0; k < m.outerSize(); ++k) {
        for (SparseC::InnerIterator it(m, k); it; ++it) col_sums[it.col()] += std::abs(it.value());
    }
    return col_sums.maxCoeff();
}

MatrixXc unvec(const VectorXc& v, Eigen::Index d) {
    return Eigen::Map<const MatrixXc>(v.data(), d, d);
}

}  // namespace

std::vector<cplx> BruteForceLiouvillian::smallest_eigenvalues(int count) const {
    cplx sigma = pick_shift(matrix);
    int krylov = std::min<Eigen::Index>(std::max(8 * count, 120), dimension());
    auto eigs = numerics::shift_invert_eigs(matrix, sigma, count, krylov, 1e-9);
    std::vector<cplx> out;
    for (auto& e : eigs) out.push_back(e.eigenvalue);
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    if (static_cast<int>(out.size()) > count) out.resize(count);
    return out;
}

MatrixXc BruteForceLiouvillian::steady_state() const {
    cplx sigma = pick_shift(matrix);
    auto eigs = numerics::shift_invert_eigs(matrix, sigma, 1, 80, 1e-7);
    if (eigs.empty()) throw NonConvergence("brute-force steady state: Arnoldi failed");
    // the eigenvalue nearest zero is the kernel
    std::sort(eigs.begin(), eigs.end(), [](const auto& a, const auto& b) {
        return std::abs(a.eigenvalue) < std::abs(b.eigenvalue);
    });
    MatrixXc rho = unvec(eigs.front().vector, hilbert_dim);
    rho = 0.5 * (rho + rho.adjoint().eval());
    cplx tr = rho.trace();
    if (std::abs(tr) < 1e-14) throw NonConvergence("brute-force steady state: zero trace");
    return rho / tr;
}

BruteForceLiouvillian brute_force_liouvillian(const QuadraticLiouvillian& liouv, int n_max,
                                              Eigen::Index max_rows) {
    liouv.validate();
    const int n = static_cast<int>(liouv.n_modes());
    double rows = std::pow(double(n_max + 1), 2.0 * n);
    if (rows > static_cast<double>(max_rows)) {
        throw DimensionTooLarge("brute_force_liouvillian: truncated space too large");
    }
    BruteForceLiouvillian bf;
    bf.n_modes = n;
    bf.n_max = n_max;
    bf.hilbert_dim = static_cast<Eigen::Index>(std::pow(double(n_max + 1), double(n)));

    SparseC h = fock::quadratic_hamiltonian_matrix(liouv.hamiltonian.a_mat,
                                                   liouv.hamiltonian.b_mat, n_max);
    std::vector<std::pair<double, SparseC>> jumps;
    for (const auto& j : liouv.jumps) {
        SparseC l(bf.hilbert_dim, bf.hilbert_dim);
        for (int k = 0; k < n; ++k) {
            SparseC ak = fock::mode_annihilation(n, n_max, k);
            if (j.loss_coeffs[k] != cplx(0.0)) l += j.loss_coeffs[k] * ak;
            if (j.gain_coeffs[k] != cplx(0.0)) l += j.gain_coeffs[k] * SparseC(ak.adjoint());
        }
        jumps.emplace_back(j.rate, std::move(l));
    }
    bf.matrix = fock::liouvillian_matrix(h, jumps);
    return bf;
}

std::vector<CoherentTrajectoryPoint> coherent_state_evolution(
    const QuadraticLiouvillian& liouv, const RapiditySpectrum& spec, int mode_r, cplx alpha0,
    const std::vector<double>& t_grid, int n_max) {
    auto bf = brute_force_liouvillian(liouv, n_max);
    const int n = bf.n_modes;
    const Eigen::Index d = bf.hilbert_dim;
    MatrixXc rho_ss = bf.steady_state();

    const VectorXc& c = spec.c_coeffs.at(mode_r);
    const VectorXc& dcoef = spec.d_coeffs.at(mode_r);
    cplx omega_r = spec.omegas.at(mode_r);

    std::vector<MatrixXc> a_ops(n), ad_ops(n);
    for (int j = 0; j < n; ++j) {
        a_ops[j] = MatrixXc(fock::mode_annihilation(n, n_max, j));
        ad_ops[j] = a_ops[j].adjoint();
    }
    // displacement generator of the normal mode: A^dag = sum (c_j a_j^dag - d_j a_j)
    auto displacement = [&](cplx alpha) -> MatrixXc {
        MatrixXc gen = MatrixXc::Zero(d, d);
        for (int j = 0; j < n; ++j) {
            MatrixXc adag = c[j] * ad_ops[j] - dcoef[j] * a_ops[j];
            gen += alpha * adag - std::conj(alpha) * adag.adjoint();
        }
        return gen.exp();
    };

    // biorthogonal extraction of the normal-mode amplitude from first moments
    MatrixXc drift = build_drift_matrix(liouv);
    VectorXc vr(2 * n);
    vr << c, dcoef;
    Eigen::ComplexEigenSolver<MatrixXc> est(drift.transpose());
    cplx lambda_r = cplx(0.0, -1.0) * omega_r;
    Eigen::Index best = 0;
    double best_d = 1e300;
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
        double dd = std::abs(est.eigenvalues()[i] - lambda_r);
        if (dd < best_d) {
            best_d = dd;
            best = i;
        }
    }
    VectorXc wl = est.eigenvectors().col(best);
    cplx pairing = wl.transpose() * vr;
    if (std::abs(pairing) < 1e-12) {
        throw NumericalError("coherent_state_evolution: left/right eigenvector pairing vanished");
    }

    auto first_moments = [&](const MatrixXc& rho) {
        VectorXc mu(2 * n);
        for (int j = 0; j < n; ++j) {
            mu[j] = (a_ops[j] * rho).trace();
            mu[n + j] = (ad_ops[j] * rho).trace();
        }
        return mu;
    };
    VectorXc mu_ss = first_moments(rho_ss);

    MatrixXc d0 = displacement(alpha0);
    MatrixXc rho0 = d0 * rho_ss * d0.adjoint();
    VectorXc state = Eigen::Map<const VectorXc>(rho0.data(), d * d);
    double norm_est = one_norm_estimate(bf.matrix);

    std::vector<double> ts = t_grid;
    std::sort(ts.begin(), ts.end());
    std::vector<CoherentTrajectoryPoint> out;
    double t_cur = 0.0;
    for (double t : ts) {
        state = expm_action(bf.matrix, std::move(state), t - t_cur, norm_est);
        t_cur = t;
        MatrixXc rho = unvec(state, d);
        rho = 0.5 * (rho + rho.adjoint().eval());

        // cutoff-level population check
        double edge = 0.0;
        for (Eigen::Index idx = 0; idx < d; ++idx) {
            Eigen::Index rem = idx;
            bool at_edge = false;
            for (int j = n - 1; j >= 0; --j) {
                if (rem % (n_max + 1) == n_max) at_edge = true;
                rem /= (n_max + 1);
            }
            if (at_edge) edge += rho(idx, idx).real();
        }
        if (edge > 1e-8) {
            throw TruncationBreach("coherent_state_evolution: population reached the Fock cutoff");
        }

        CoherentTrajectoryPoint p;
        p.t = t;
        VectorXc dmu = first_moments(rho) - mu_ss;
        p.alpha = cplx(wl.transpose() * dmu) / pairing;
        p.purity = (rho * rho).trace().real();

        cplx alpha_pred = alpha0 * std::exp(cplx(0.0, -1.0) * omega_r * t);
        MatrixXc dp = displacement(alpha_pred);
        MatrixXc target = dp * rho_ss * dp.adjoint();
        // Uhlmann fidelity
        Eigen::SelfAdjointEigenSolver<MatrixXc> esr(rho);
        MatrixXc sqrt_rho = esr.eigenvectors() *
                            esr.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                            esr.eigenvectors().adjoint();
        Eigen::SelfAdjointEigenSolver<MatrixXc> esm(sqrt_rho * target * sqrt_rho);
        p.fidelity_to_displaced_ness =
            std::pow(esm.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum(), 2);
        out.push_back(p);
    }
    return out;
}

namespace {

// All -i sum m_r w_r with |Re| below the bound, over the full 2N set.
void enumerate_combos(const std::vector<cplx>& omegas, std::size_t idx, cplx acc,
                      double decay_bound, int depth_left, std::vector<cplx>& out) {
    if (idx == omegas.size()) {
        out.push_back(acc);
        return;
    }
    for (int m = 0;; ++m) {
        cplx lambda = cplx(0.0, -1.0) * (acc + double(m) * omegas[idx]);
        if (m > depth_left || -lambda.real() > decay_bound) break;
        enumerate_combos(omegas, idx + 1, acc + double(m) * omegas[idx], decay_bound,
                         depth_left - m, out);
    }
}

}  // namespace

SpectrumCheck verify_spectrum_composition(const QuadraticLiouvillian& liouv,
                                          const RapiditySpectrum& spec, int n_max,
                                          int count, double match_tol, double trunc_tol) {
    SpectrumCheck check;
    auto bf = brute_force_liouvillian(liouv, n_max);
    auto bf_up = brute_force_liouvillian(liouv, n_max + 1);
    check.eigenvalues = bf.smallest_eigenvalues(count);
    auto eig_up = bf_up.smallest_eigenvalues(count + 8);

    std::vector<cplx> full = spec.full_set();
    double bound = 0.0;
    for (cplx l : check.eigenvalues) bound = std::max(bound, -l.real());
    double min_decay = 1e300;
    for (cplx w : full) min_decay = std::min(min_decay, -w.imag());
    int depth = (min_decay > 0.0)
                    ? std::min(60, static_cast<int>(std::ceil((bound + 1e-6) / min_decay)) + 1)
                    : 60;
    std::vector<cplx> combos;
    enumerate_combos(full, 0, cplx(0.0), bound + 1e-6, depth, combos);

    for (cplx l : check.eigenvalues) {
        double d_up = 1e300;
        for (cplx lu : eig_up) d_up = std::min(d_up, std::abs(l - lu));
        bool trunc = d_up > trunc_tol;
        check.truncation.push_back(trunc);
        if (trunc) continue;
        ++check.checked;
        double best = 1e300;
        for (cplx cb : combos) best = std::min(best, std::abs(l - cplx(0.0, -1.0) * cb));
        if (best <= match_tol) {
            ++check.matched;
            check.max_residual = std::max(check.max_residual, best);
        } else {
            check.max_residual = std::max(check.max_residual, best);
        }
    }
    return check;
}

}  // namespace polarion::thirdq
