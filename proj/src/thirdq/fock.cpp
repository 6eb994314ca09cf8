#include "polarion/thirdq/fock.hpp"

#include <cmath>

namespace polarion::thirdq::fock {

SparseC annihilation(int n_max) {
    SparseC a(n_max + 1, n_max + 1);
    std::vector<Eigen::Triplet<cplx>> t;
    for (int n = 1; n <= n_max; ++n) t.emplace_back(n - 1, n, std::sqrt(double(n)));
    a.setFromTriplets(t.begin(), t.end());
    return a;
}

SparseC identity(Eigen::Index d) {
    SparseC eye(d, d);
    eye.setIdentity();
    return eye;
}

SparseC kron(const SparseC& a, const SparseC& b) {
    SparseC out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<cplx>> t;
    t.reserve(static_cast<std::size_t>(a.nonZeros()) * b.nonZeros());
    for (int ka = 0; ka < a.outerSize(); ++ka) {
        for (SparseC::InnerIterator ia(a, ka); ia; ++ia) {
            for (int kb = 0; kb < b.outerSize(); ++kb) {
                for (SparseC::InnerIterator ib(b, kb); ib; ++ib) {
                    t.emplace_back(ia.row() * b.rows() + ib.row(),
                                   ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

SparseC mode_annihilation(int n_modes, int n_max, int j) {
    SparseC op = (j == 0) ? annihilation(n_max) : identity(n_max + 1);
    for (int m = 1; m < n_modes; ++m) {
        op = kron(op, (m == j) ? annihilation(n_max) : identity(n_max + 1));
    }
    return op;
}

SparseC quadratic_hamiltonian_matrix(const MatrixXc& a_mat, const MatrixXc& b_mat, int n_max) {
    const int n = static_cast<int>(a_mat.rows());
    std::vector<SparseC> ops(n);
    for (int j = 0; j < n; ++j) ops[j] = mode_annihilation(n, n_max, j);
    const Eigen::Index d = ops[0].rows();
    SparseC h(d, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (a_mat(i, j) != cplx(0.0)) {
                h += a_mat(i, j) * SparseC(ops[i].adjoint() * ops[j]);
            }
            if (b_mat.size() > 0 && b_mat(i, j) != cplx(0.0)) {
                SparseC cc = SparseC(ops[i].adjoint() * SparseC(ops[j].adjoint()));
                h += 0.5 * b_mat(i, j) * cc;
                h += 0.5 * std::conj(b_mat(i, j)) * SparseC(cc.adjoint());
            }
        }
    }
    return h;
}

SparseC liouvillian_matrix(const SparseC& h,
                           const std::vector<std::pair<double, SparseC>>& jumps) {
    const Eigen::Index d = h.rows();
    SparseC eye = identity(d);
    const cplx mi(0.0, -1.0);
    // vec(A rho B) = (B^T kron A) vec(rho), column-major
    SparseC liou = mi * (kron(eye, h) - kron(SparseC(h.transpose()), eye));
    for (const auto& [gamma, l] : jumps) {
        SparseC ldl = SparseC(l.adjoint()) * l;
        liou += gamma * (kron(SparseC(l.conjugate()), l) -
                         0.5 * kron(eye, ldl) - 0.5 * kron(SparseC(ldl.transpose()), eye));
    }
    return liou;
}

Eigen::RowVectorXcd trace_functional(Eigen::Index hilbert_dim) {
    Eigen::RowVectorXcd tr = Eigen::RowVectorXcd::Zero(hilbert_dim * hilbert_dim);
    for (Eigen::Index i = 0; i < hilbert_dim; ++i) tr[i * hilbert_dim + i] = 1.0;
    return tr;
}

}  // namespace polarion::thirdq::fock
