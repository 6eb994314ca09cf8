#include "polarion/maxwell/mode.hpp"

#include <cmath>

namespace polarion::maxwell {

namespace {

// Trapezoid weight for sample i of n.
inline double trap_w(std::size_t i, std::size_t n) {
    return (i == 0 || i + 1 == n) ? 0.5 : 1.0;
}

}  // namespace

cplx mode_inner_product(const QnmMode& a, const QnmMode& b, const LayerStack& stack) {
    if (a.size() != b.size() || std::abs(a.dz - b.dz) > 1e-12 ||
        std::abs(a.z_min - b.z_min) > 1e-9) {
        throw GridMismatch("mode_inner_product: modes sampled on different grids");
    }
    cplx acc = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LorentzMedium& m = stack.medium_at(a.z_at(i));
        cplx term = m.eps_b * std::conj(a.e_profile[i]) * b.e_profile[i];
        if (m.coupled()) {
            term += m.rho * m.omega0 * m.omega0 * std::conj(a.x_profile[i]) * b.x_profile[i];
        }
        acc += trap_w(i, n) * term;
    }
    return acc * a.dz;
}

QnmMode normalize_mode(QnmMode mode, const LayerStack& stack) {
    const std::size_t n = mode.size();
    if (n == 0) throw ZeroNorm("normalize_mode: empty profile");
    double photon = 0.0, exciton = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const LorentzMedium& m = stack.medium_at(mode.z_at(i));
        double w = trap_w(i, n);
        photon += w * m.eps_b * std::norm(mode.e_profile[i]);
        if (m.coupled()) {
            exciton += w * m.rho * m.omega0 * m.omega0 * std::norm(mode.x_profile[i]);
        }
    }
    photon *= mode.dz;
    exciton *= mode.dz;
    double total = photon + exciton;
    if (total <= 0.0 || !std::isfinite(total)) {
        throw ZeroNorm("normalize_mode: null mode profile");
    }
    // Energy convention: classical mode energy = hbar |Re omega|, which for
    // the eq-normalization inner product means N_j = |Re omega| / 2.
    double target = 0.5 * std::abs(mode.omega.real());
    double scale = std::sqrt(target / total);
    for (auto& e : mode.e_profile) e *= scale;
    for (auto& x : mode.x_profile) x *= scale;
    mode.norm = target;
    mode.photon_fraction = photon / total;
    mode.exciton_fraction = exciton / total;
    mode.leaky_warning =
        std::abs(mode.omega.imag()) > 0.1 * std::abs(mode.omega.real());
    return mode;
}

}  // namespace polarion::maxwell
