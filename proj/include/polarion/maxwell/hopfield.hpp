#pragma once

#include "polarion/errors.hpp"

namespace polarion::maxwell {

struct HopfieldParams {
    double e_c = 0.0;         // photon energy, meV
    double e_x = 0.0;         // exciton energy, meV
    double omega_rabi = 0.0;  // Rabi energy, meV, >= 0

    void validate() const {
        if (omega_rabi < 0.0) throw ConfigError("HopfieldParams: omega_rabi must be >= 0");
    }
};

struct HopfieldResult {
    double e_plus = 0.0;   // upper polariton energy
    double e_minus = 0.0;  // lower polariton energy
    double c_coeff = 0.0;  // photon amplitude of the lower branch
    double x_coeff = 0.0;  // exciton amplitude of the lower branch
};

// Closed-form two-level polariton branches:
//   E_pm = (E_C + E_X)/2 +- 1/2 sqrt((E_C - E_X)^2 + Omega^2)
// (c_coeff, x_coeff) is the normalized lower-branch eigenvector.
HopfieldResult hopfield_eigen(const HopfieldParams& p);

}  // namespace polarion::maxwell
