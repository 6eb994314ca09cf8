#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseLU>
#include <complex>
#include <functional>
#include <vector>

namespace polarion::numerics {

using cplx = std::complex<double>;
using VectorXc = Eigen::VectorXcd;
using SparseC = Eigen::SparseMatrix<cplx>;

struct RitzPair {
    cplx value;       // eigenvalue of the operator passed to arnoldi()
    VectorXc vector;  // Ritz vector
    double residual;  // |Op v - theta v| / |theta v|
};

// Plain Arnoldi iteration on an operator given as a matvec callback.
// Returns Ritz pairs sorted by descending |theta|.
std::vector<RitzPair> arnoldi(const std::function<VectorXc(const VectorXc&)>& op,
                              Eigen::Index n, int krylov_dim, unsigned seed = 12345);

struct ShiftInvertResult {
    cplx eigenvalue;  // eigenvalue of the original pencil A z = lambda B z
    VectorXc vector;
    double residual;
};

// Eigenvalues of the pencil A z = lambda B z closest to the shift sigma,
// via Arnoldi on (A - sigma B)^{-1} B with a sparse LU factorization.
std::vector<ShiftInvertResult> shift_invert_eigs(const SparseC& a, const SparseC& b,
                                                 cplx sigma, int n_wanted,
                                                 int krylov_dim = 0,
                                                 double residual_tol = 1e-8);

// Same for the standard problem A z = lambda z.
std::vector<ShiftInvertResult> shift_invert_eigs(const SparseC& a, cplx sigma,
                                                 int n_wanted, int krylov_dim = 0,
                                                 double residual_tol = 1e-8);

}  // namespace polarion::numerics
