#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

namespace polarion::thirdq::fock {

using cplx = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using SparseC = Eigen::SparseMatrix<cplx>;

// Single-mode annihilation operator on an (n_max+1)-dimensional Fock space.
SparseC annihilation(int n_max);

// Identity of dimension d.
SparseC identity(Eigen::Index d);

// Kronecker product.
SparseC kron(const SparseC& a, const SparseC& b);

// Annihilation operator of mode j (0-based) of n_modes, each truncated at n_max.
SparseC mode_annihilation(int n_modes, int n_max, int j);

// Hamiltonian matrix sum A_ij a_i^dag a_j + 1/2 (B_ij a_i^dag a_j^dag + h.c.)
SparseC quadratic_hamiltonian_matrix(const MatrixXc& a_mat, const MatrixXc& b_mat, int n_max);

// Vectorized superoperator rho -> -i[H, rho] + sum gamma_mu D[L_mu] rho,
// column-major vec convention.
SparseC liouvillian_matrix(const SparseC& h,
                           const std::vector<std::pair<double, SparseC>>& jumps);

// Trace functional as a row vector on the vectorized space.
Eigen::RowVectorXcd trace_functional(Eigen::Index hilbert_dim);

}  // namespace polarion::thirdq::fock
