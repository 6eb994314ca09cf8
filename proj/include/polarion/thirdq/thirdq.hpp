#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <vector>

#include "polarion/bogoliubov/bogoliubov.hpp"
#include "polarion/errors.hpp"

namespace polarion::thirdq {

using cplx = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;
using SparseC = Eigen::SparseMatrix<cplx>;

// L_mu = sum_j (l_j P_j + g_j P_j^dag) applied at rate gamma (meV).
struct LinearJumpOperator {
    VectorXc loss_coeffs;  // l_j
    VectorXc gain_coeffs;  // g_j
    double rate = 0.0;     // gamma_mu >= 0

    void validate() const {
        if (rate < 0.0) throw ConfigError("LinearJumpOperator: rate must be >= 0");
        if (loss_coeffs.size() != gain_coeffs.size()) {
            throw ConfigError("LinearJumpOperator: l and g must have equal length");
        }
        if (loss_coeffs.isZero(0.0) && gain_coeffs.isZero(0.0)) {
            throw ConfigError("LinearJumpOperator: at least one of l, g must be nonzero");
        }
    }
};

struct QuadraticLiouvillian {
    bogoliubov::QuadraticHamiltonian hamiltonian;
    std::vector<LinearJumpOperator> jumps;

    Eigen::Index n_modes() const { return hamiltonian.size(); }
    void validate() const;
};

// Complex normal-mode frequencies with Re > 0 plus the (c_rj, d_rj)
// coefficients of the associated displacement operators.
struct RapiditySpectrum {
    std::vector<cplx> omegas;       // N rapidities, Re > 0, sorted by Re
    std::vector<VectorXc> c_coeffs; // c_{r,j}
    std::vector<VectorXc> d_coeffs; // d_{r,j}
    bool degenerate_warning = false;

    // Full 2N multiset: omegas plus their -conj partners.
    std::vector<cplx> full_set() const;
};

// First-moment drift: d<(a, a^dag)>/dt = M <(a, a^dag)>.
MatrixXc build_drift_matrix(const QuadraticLiouvillian& liouv);

// Rapidities omega_r = i lambda_r from the drift eigenvalues with
// Re(omega_r) > 0; mode coefficients from the right eigenvectors,
// normalized so sum_j (|c_j|^2 - |d_j|^2) = 1 when that pairing is positive.
RapiditySpectrum rapidities(const MatrixXc& drift);

struct GklsRecord {
    double re_omega = 0.0;  // meV
    double im_omega = 0.0;  // meV, < 0 for a stable mode
    double rate() const { return -2.0 * im_omega; }
};

// Per-mode diagonal GKLS records of the twin-Liouvillian form.
std::vector<GklsRecord> diagonal_master_equation(const RapiditySpectrum& spec);

// Human-readable rendering of one GKLS record.
std::string render_gkls_record(const GklsRecord& rec, int index);

// Symmetric steady-state second moments T with <v_i v_j> = T_ij + Omega_c/2,
// v = (a, a^dag), solving M T + T M^T + D = 0.
MatrixXc ness_covariance(const QuadraticLiouvillian& liouv);

// <a_i^dag a_j> occupation block extracted from ness_covariance.
MatrixXc ness_occupation(const QuadraticLiouvillian& liouv);

}  // namespace polarion::thirdq
