#pragma once

#include "polarion/maxwell/mode.hpp"
#include "polarion/thirdq/thirdq.hpp"

namespace polarion::thirdq {

// Classical profile pair attached to each normal mode of the Liouvillian.
struct FieldSuperoperators {
    std::vector<int> mode_index;  // r -> index into the classical mode list
    std::vector<std::vector<cplx>> e_profiles;
    std::vector<std::vector<cplx>> x_profiles;
};

// Associates each rapidity with the classical QNM whose complex frequency
// matches within rel_tol. Throws UnmatchedMode on failure or ambiguity.
FieldSuperoperators field_superoperator_coefficients(
    const std::vector<maxwell::QnmMode>& modes, const RapiditySpectrum& spec,
    double rel_tol = 1e-6);

// First-order two-point correlation at grid indices (i1, i2) for a coherent
// amplitude alpha in normal mode r on top of the NESS:
//   G1 = |alpha|^2 E_r*(z1) E_r(z2) + sum_ij <a_i^dag a_j> E_i*(z1) E_j(z2)
cplx g1_two_point(const FieldSuperoperators& fields, int r, cplx alpha,
                  std::size_t i1, std::size_t i2, const MatrixXc& ness_occ);

}  // namespace polarion::thirdq
