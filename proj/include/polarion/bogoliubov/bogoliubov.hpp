#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "polarion/errors.hpp"
#include "polarion/maxwell/medium.hpp"
#include "polarion/maxwell/mode.hpp"

namespace polarion::bogoliubov {

using cplx = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

// H = sum_ij A_ij c_i^dag c_j + 1/2 sum_ij (B_ij c_i^dag c_j^dag + h.c.)
// with A Hermitian (meV) and B symmetric (meV).
struct QuadraticHamiltonian {
    MatrixXc a_mat;
    MatrixXc b_mat;

    Eigen::Index size() const { return a_mat.rows(); }
    void validate(double tol = 1e-12) const;
};

// c_i = sum_j (u_ij P_j + v_ij P_j^dag), with u u^dag - v v^dag = 1 and
// u v^T - v u^T = 0; freqs are the positive polariton frequencies, ascending.
struct BogoliubovTransform {
    MatrixXc u;
    MatrixXc v;
    Eigen::VectorXd freqs;
};

// [[A, B], [B^dag, A^T]]
MatrixXc build_bdg(const QuadraticHamiltonian& h);

// Symplectic diagonalization via the eigenproblem of Sigma * H_BdG with
// Sigma = diag(1, -1). Throws UnstableHamiltonian when any symplectic
// eigenvalue is <= 1e-10 meV.
BogoliubovTransform diagonalize_symplectic(const QuadraticHamiltonian& h);

// Reassembles H_BdG from a transform (for verification):
// H_BdG = Sigma S diag(freqs, freqs) S^dag Sigma with S = [[u, v], [v*, u*]].
MatrixXc reconstruct_bdg(const BogoliubovTransform& t);

// Two-mode (photon + matter) plane-wave Hamiltonian at wavenumber k,
// including counter-rotating terms and the diamagnetic A^2 contribution.
QuadraticHamiltonian hopfield_hamiltonian(double k, const maxwell::LorentzMedium& m);

// Projects sampled classical (E, X) fields onto normalized mode profiles:
// amplitude_j = N_j^{-1} int (E eps_b E_j^* + X rho w0^2 X_j^*) dz.
std::vector<cplx> polariton_projection(const std::vector<maxwell::QnmMode>& modes,
                                       const std::vector<cplx>& e_field,
                                       const std::vector<cplx>& x_field,
                                       const maxwell::LayerStack& stack);

}  // namespace polarion::bogoliubov
