#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "polarion/errors.hpp"
#include "polarion/maxwell/mode.hpp"

namespace polarion::interactions {

using cplx = std::complex<double>;

// U_ij = g * int |X_i|^2 |X_j|^2 over the given measure (meV).
struct InteractionMatrix {
    Eigen::MatrixXd u;
    int dimensionality = 1;
};

// int |x_i|^2 |x_j|^2 d^dim z by trapezoid quadrature. For dim > 1 the
// profile is treated as a separable isotropic product of the sampled 1D
// factor, so the integral is the 1D result raised to the power dim.
double overlap_integral(const std::vector<cplx>& x_i, const std::vector<cplx>& x_j,
                        double dz, int dim = 1);

// U_ij = g * overlap_integral(X_i, X_j) from mode exciton profiles.
InteractionMatrix interaction_matrix(double g, const std::vector<maxwell::QnmMode>& modes,
                                     int dim = 1);

// Density-independent vacuum-fluctuation shift 2 U_ii (scales with the
// square of the exciton fraction).
inline double vacuum_blueshift(double u_ii) { return 2.0 * u_ii; }

// Single-mode interaction coefficient of a uniform exciton profile with
// squared amplitude (exciton fraction) `fraction` spread over `area`:
//   U = g_2d * fraction^2 / area
double uniform_flake_u(double g_2d, double fraction, double area);

}  // namespace polarion::interactions
