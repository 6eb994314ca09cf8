#include "polarion/maxwell/medium.hpp"

#include <cmath>

namespace polarion::maxwell {

cplx effective_permittivity(const LorentzMedium& m, cplx omega, double pole_tol) {
    cplx eps(m.eps_b, m.eps_bI);
    if (m.alpha == 0.0) return eps;
    cplx denom = m.omega0 * m.omega0 - cplx(0.0, 2.0 * m.gamma_x) * omega - omega * omega;
    double scale = std::max(m.omega0 * m.omega0, std::norm(omega));
    if (std::abs(denom) < pole_tol * std::max(scale, 1.0)) {
        throw PoleProximity("effective_permittivity: omega too close to the matter resonance pole");
    }
    return eps + m.alpha * m.alpha / (units::eps0 * m.rho * denom);
}

const LorentzMedium& LayerStack::medium_at(double z) const {
    static const LorentzMedium vacuum{};
    double z0 = 0.0;
    for (const auto& l : layers) {
        if (z >= z0 && z < z0 + l.thickness_nm) return l.medium;
        z0 += l.thickness_nm;
    }
    if (!layers.empty() && z >= z0 && z <= z0 + 1e-12) return layers.back().medium;
    return vacuum;
}

}  // namespace polarion::maxwell
