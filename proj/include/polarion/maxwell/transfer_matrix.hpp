#pragma once

#include <Eigen/Dense>

#include "polarion/maxwell/medium.hpp"
#include "polarion/maxwell/mode.hpp"

namespace polarion::maxwell {

using Matrix2c = Eigen::Matrix2cd;

// 2x2 matrix relating (forward, backward) wave amplitudes in the left
// terminal medium (vacuum, referenced at z = 0) to amplitudes in the right
// terminal medium (referenced at z = L), at normal incidence.
// det equals the ratio of terminal wavenumbers (1 for identical media).
Matrix2c transfer_matrix(const LayerStack& stack, cplx omega);

// Characteristic function whose zeros are the outgoing-wave eigenfrequencies:
// the transfer-matrix element enforcing no incoming waves on either side.
cplx outgoing_characteristic(const LayerStack& stack, cplx omega);

// Characteristic function for perfect-mirror termination: field value at the
// right wall when launched with E = 0 at the left wall.
cplx mirror_characteristic(const LayerStack& stack, cplx omega);

// Samples the piecewise-analytic mode profile for eigenfrequency omega on a
// uniform grid of n points spanning the stack (plus the terminal half-waves
// for outgoing termination). The result is not yet normalized.
QnmMode sample_mode_profile(const LayerStack& stack, cplx omega, std::size_t n_points);

struct QnmSearchRegion {
    double re_min = 0.0, re_max = 0.0;  // meV
    double im_min = 0.0, im_max = 0.0;  // meV
};

// Complex eigenfrequencies of the stack inside the search region, found by
// argument-principle contour subdivision plus Newton polish on the
// characteristic function. Modes are sorted by Re(omega), sampled and
// normalized.
std::vector<QnmMode> find_qnms(const LayerStack& stack, const QnmSearchRegion& region,
                               std::size_t max_modes, std::size_t profile_points = 2001);

}  // namespace polarion::maxwell
