#pragma once

#include "polarion/thirdq/thirdq.hpp"

namespace polarion::thirdq {

// Literal realization of the GKSL equation on a truncated Fock space.
struct BruteForceLiouvillian {
    int n_modes = 0;
    int n_max = 0;
    Eigen::Index hilbert_dim = 0;
    SparseC matrix;  // (hilbert_dim^2) x (hilbert_dim^2)

    Eigen::Index dimension() const { return matrix.rows(); }

    // Smallest-|lambda| eigenvalues via shift-invert Arnoldi.
    std::vector<cplx> smallest_eigenvalues(int count) const;

    // Steady state (kernel vector reshaped, trace-normalized, Hermitized).
    MatrixXc steady_state() const;
};

// Throws DimensionTooLarge when (n_max+1)^(2 n_modes) exceeds max_rows.
BruteForceLiouvillian brute_force_liouvillian(const QuadraticLiouvillian& liouv, int n_max,
                                              Eigen::Index max_rows = 100000);

struct CoherentTrajectoryPoint {
    double t = 0.0;
    cplx alpha{0.0, 0.0};
    double purity = 0.0;
    double fidelity_to_displaced_ness = 0.0;
};

// Propagates the displaced NESS D_r(alpha0) rho_ss D_r^dag under the
// brute-force Liouvillian and extracts the normal-mode amplitude at each
// requested time. Throws TruncationBreach when cutoff-level population
// exceeds 1e-8.
std::vector<CoherentTrajectoryPoint> coherent_state_evolution(
    const QuadraticLiouvillian& liouv, const RapiditySpectrum& spec, int mode_r,
    cplx alpha0, const std::vector<double>& t_grid, int n_max);

struct SpectrumCheck {
    std::vector<cplx> eigenvalues;   // smallest-|lambda| brute-force eigenvalues
    std::vector<bool> truncation;    // flagged by the n_max sensitivity filter
    int checked = 0;                 // non-truncation eigenvalues tested
    int matched = 0;                 // of those, matched to -i sum m_r omega_r
    double max_residual = 0.0;       // worst match distance (meV)

    bool all_matched() const { return matched == checked; }
};

// Central cross-check: each non-truncation eigenvalue among the `count`
// smallest of the brute-force Liouvillian must equal -i sum_r m_r omega_r
// over the full 2N rapidity set for nonnegative integers m_r.
SpectrumCheck verify_spectrum_composition(const QuadraticLiouvillian& liouv,
                                          const RapiditySpectrum& spec, int n_max,
                                          int count = 20, double match_tol = 1e-7,
                                          double trunc_tol = 1e-6);

}  // namespace polarion::thirdq
