#pragma once

#include <complex>
#include <vector>

#include "polarion/maxwell/medium.hpp"

namespace polarion::maxwell {

// One polariton eigenmode sampled on a uniform grid z_i = z_min + i*dz.
struct QnmMode {
    cplx omega{0.0, 0.0};  // complex frequency, meV
    double z_min = 0.0;    // nm
    double dz = 0.0;       // nm
    std::vector<cplx> e_profile;
    std::vector<cplx> x_profile;
    double norm = 0.0;  // N_j = int(eps_b |E|^2 + rho omega0^2 |X|^2) dz after scaling
    double photon_fraction = 0.0;
    double exciton_fraction = 0.0;
    bool leaky_warning = false;  // |Im w| / |Re w| > 0.1, normalization is approximate

    std::size_t size() const { return e_profile.size(); }
    double z_at(std::size_t i) const { return z_min + dz * static_cast<double>(i); }
};

// Rescales the profiles so the classical mode energy equals hbar|Re omega|,
// i.e. N_j = |Re omega| / 2, and fills in norm and Hopfield fractions.
// The integral runs over the sampled window (including any PML region).
QnmMode normalize_mode(QnmMode mode, const LayerStack& stack);

// Weighted inner product of eq-normalization type between two modes sampled
// on the same grid: int (eps_b E_i* E_j + rho omega0^2 X_i* X_j) dz.
cplx mode_inner_product(const QnmMode& a, const QnmMode& b, const LayerStack& stack);

}  // namespace polarion::maxwell
