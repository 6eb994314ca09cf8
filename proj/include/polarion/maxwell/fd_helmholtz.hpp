#pragma once

#include <vector>

#include "polarion/maxwell/medium.hpp"
#include "polarion/maxwell/mode.hpp"
#include "polarion/maxwell/transfer_matrix.hpp"

namespace polarion::maxwell {

// Finite-difference solver for the coupled (E, X) Helmholtz eigenproblem with
// complex-stretched PML coordinates. The frequency-dependent permittivity is
// kept linear by retaining X and the first-order auxiliary fields u = omega E,
// w = omega X, giving a generalized linear eigenproblem A z = omega B z.
//
// Modes with Re(omega) inside [region.re_min, region.re_max] are extracted by
// shift-invert Arnoldi iteration at a set of shifts spanning the window.
// Throws ResolutionTooCoarse if a grid-doubling self-check moves the
// frequencies by more than the requested tolerance.
std::vector<QnmMode> fd_helmholtz_qnm(const LayerStack& stack, std::size_t grid_points,
                                      const QnmSearchRegion& region,
                                      std::size_t max_modes,
                                      bool self_check = false,
                                      double self_check_tol = 1e-3);

}  // namespace polarion::maxwell
