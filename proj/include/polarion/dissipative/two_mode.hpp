#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <complex>
#include <string>
#include <vector>

#include "polarion/errors.hpp"

namespace polarion::dissipative {

using cplx = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using SparseC = Eigen::SparseMatrix<cplx>;

// Rotating-frame driven-dissipative two-mode Kerr model:
//   H = delta (n_L + n_R) + J (a_L^dag a_R + h.c.)
//     + 1/2 (U11 a_L^dag a_L^dag a_L a_L + U22 a_R^dag a_R^dag a_R a_R
//            + 2 U12 n_L n_R)
//     + pump_amp (a_L + a_L^dag + a_R + a_R^dag)
// with loss rate gamma on each mode. Energies in meV, delta = omega_LR - omega_p.
struct TwoModeModel {
    double omega_lr = 0.0;
    double j_coupling = 0.0;
    double gamma = 0.0;
    double u11 = 0.0;
    double u22 = 0.0;
    double u12 = 0.0;
    double delta = 0.0;
    double pump_amp = 1e-3;  // weak-drive default, n_L < 0.1
    int n_max = 8;
    bool mirror_symmetric = false;

    void validate() const {
        if (gamma <= 0.0) throw ConfigError("TwoModeModel: gamma must be > 0");
        if (n_max < 3) throw ConfigError("TwoModeModel: cutoff below minimum 3");
        if (mirror_symmetric && u11 != u22) {
            throw ConfigError("TwoModeModel: mirror symmetry requires u11 == u22");
        }
    }
};

// Localized-basis coefficients from the symmetric/antisymmetric doublet:
// omega_LR = Re(wS + wAS)/2, J = Re(wS - wAS)/2, gamma = -Im(wS + wAS).
struct LocalizedBasis {
    double omega_lr = 0.0;
    double j_coupling = 0.0;
    double gamma = 0.0;
};
LocalizedBasis localized_basis(cplx omega_s, cplx omega_as);

struct SteadyStateResult {
    MatrixXc rho;           // (n_max+1)^2 square density matrix
    double residual = 0.0;  // ||L vec(rho)||
    double n_l = 0.0;
    double n_r = 0.0;
    int n_max = 0;

    // trace / Hermiticity / positivity / cutoff-population invariants
    void validate() const;
};

struct CorrelationSet {
    double g11 = 0.0;
    double g22 = 0.0;
    double g12 = 0.0;
    double cs_ratio = 0.0;  // g12 / sqrt(g11 g22)
};

// Sparse rotating-frame Liouvillian; throws DimensionTooLarge above a
// 10^4 density-matrix dimension.
SparseC build_liouvillian(const TwoModeModel& m);

// Direct solve of L rho = 0 with the trace row pinned.
SteadyStateResult steady_state(const TwoModeModel& m);

// <a_i^dag a_j^dag a_j a_i> / (<n_i><n_j>), modes indexed 0 (L) and 1 (R).
double g2(const SteadyStateResult& ss, int i, int j);

CorrelationSet correlations(const SteadyStateResult& ss);

struct SweepRow {
    double delta = 0.0;
    double g11 = 0.0, g22 = 0.0, g12 = 0.0, cs_ratio = 0.0;
    double n_l = 0.0, n_r = 0.0;
    bool converged = false;
    std::string error;
};

// One steady state per detuning; failures are recorded per row and the
// sweep continues. Points run OpenMP-parallel unless parallel = false.
std::vector<SweepRow> detuning_sweep(const TwoModeModel& m, const std::vector<double>& deltas,
                                     bool zero_cross_interaction = false, bool parallel = true);

// Default 161-point grid spanning [-3, 3] * max(U11, J) around zero.
std::vector<double> default_delta_grid(const TwoModeModel& m, int points = 161);

}  // namespace polarion::dissipative
