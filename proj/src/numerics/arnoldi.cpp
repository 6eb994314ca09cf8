#include "polarion/numerics/arnoldi.hpp"

#include <algorithm>
#include <random>

#include "polarion/errors.hpp"

namespace polarion::numerics {

std::vector<RitzPair> arnoldi(const std::function<VectorXc(const VectorXc&)>& op,
                              Eigen::Index n, int krylov_dim, unsigned seed) {
    int m = std::min<Eigen::Index>(krylov_dim, n);
    std::mt19937 gen(seed);
    std::normal_distribution<double> dist;
    VectorXc v0(n);
    for (Eigen::Index i = 0; i < n; ++i) v0[i] = cplx(dist(gen), dist(gen));
    v0.normalize();

    Eigen::MatrixXcd v_basis(n, m + 1);
    Eigen::MatrixXcd hess = Eigen::MatrixXcd::Zero(m + 1, m);
    v_basis.col(0) = v0;
    int k = m;
    for (int j = 0; j < m; ++j) {
        VectorXc w = op(v_basis.col(j));
        // modified Gram-Schmidt with one reorthogonalization pass
        for (int pass = 0; pass < 2; ++pass) {
            for (int i = 0; i <= j; ++i) {
                cplx h = v_basis.col(i).dot(w);
                w -= h * v_basis.col(i);
                hess(i, j) += h;
            }
        }
        double nw = w.norm();
        hess(j + 1, j) = nw;
        if (nw < 1e-12) {
            k = j + 1;  // invariant subspace found
            break;
        }
        v_basis.col(j + 1) = w / nw;
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(hess.topLeftCorner(k, k));
    std::vector<RitzPair> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        RitzPair p;
        p.value = es.eigenvalues()[i];
        VectorXc y = es.eigenvectors().col(i);
        p.vector = v_basis.leftCols(k) * y;
        // residual bound |h_{k+1,k}| |y_k| / |theta|
        double tail = (k < m + 1) ? std::abs(hess(k, k - 1)) * std::abs(y[k - 1]) : 0.0;
        p.residual = tail / std::max(std::abs(p.value), 1e-300);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(),
              [](const RitzPair& a, const RitzPair& b) { return std::abs(a.value) > std::abs(b.value); });
    return out;
}

namespace {

std::vector<ShiftInvertResult> shift_invert_impl(const SparseC& a, const SparseC* b,
                                                 cplx sigma, int n_wanted, int krylov_dim,
                                                 double residual_tol) {
    const Eigen::Index n = a.rows();
    SparseC shifted = a;
    if (b) {
        shifted -= sigma * (*b);
    } else {
        SparseC eye(n, n);
        eye.setIdentity();
        shifted -= sigma * eye;
    }
    shifted.makeCompressed();
    Eigen::SparseLU<SparseC> lu;
    lu.compute(shifted);
    if (lu.info() != Eigen::Success) {
        throw NumericalError("shift_invert_eigs: sparse LU factorization failed (shift hits an eigenvalue?)");
    }
    auto op = [&](const VectorXc& x) -> VectorXc {
        VectorXc rhs = b ? VectorXc((*b) * x) : x;
        return lu.solve(rhs);
    };
    if (krylov_dim <= 0) krylov_dim = std::min<Eigen::Index>(std::max(4 * n_wanted, 40), n);
    auto ritz = arnoldi(op, n, krylov_dim);

    std::vector<ShiftInvertResult> out;
    for (const auto& p : ritz) {
        if (std::abs(p.value) < 1e-14) continue;
        if (p.residual > residual_tol) continue;
        ShiftInvertResult r;
        r.eigenvalue = sigma + 1.0 / p.value;
        r.vector = p.vector;
        r.residual = p.residual;
        out.push_back(std::move(r));
        if (static_cast<int>(out.size()) >= n_wanted) break;
    }
    return out;
}

}  // namespace

std::vector<ShiftInvertResult> shift_invert_eigs(const SparseC& a, const SparseC& b, cplx sigma,
                                                 int n_wanted, int krylov_dim,
                                                 double residual_tol) {
    return shift_invert_impl(a, &b, sigma, n_wanted, krylov_dim, residual_tol);
}

std::vector<ShiftInvertResult> shift_invert_eigs(const SparseC& a, cplx sigma, int n_wanted,
                                                 int krylov_dim, double residual_tol) {
    return shift_invert_impl(a, nullptr, sigma, n_wanted, krylov_dim, residual_tol);
}

}  // namespace polarion::numerics
