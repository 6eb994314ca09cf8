#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "polarion/errors.hpp"
#include "polarion/units.hpp"

namespace polarion::maxwell {

using cplx = std::complex<double>;

// Background dielectric plus a single Lorentz oscillator species.
// All energies in meV (hbar = 1), densities in internal units.
struct LorentzMedium {
    double eps_b = 1.0;    // real background permittivity
    double eps_bI = 0.0;   // imaginary permittivity (absorption), >= 0
    double omega0 = 0.0;   // matter oscillator energy, meV
    double gamma_x = 0.0;  // matter decay rate, meV
    double rho = 1.0;      // oscillator mass density, > 0
    double alpha = 0.0;    // light-matter coupling density
    double g_int = 0.0;    // quartic matter interaction constant

    void validate() const {
        if (eps_b <= 0.0) throw ConfigError("LorentzMedium: eps_b must be > 0");
        if (eps_bI < 0.0) throw ConfigError("LorentzMedium: eps_bI must be >= 0");
        if (gamma_x < 0.0) throw ConfigError("LorentzMedium: gamma_x must be >= 0");
        if (rho <= 0.0)
            throw ConfigError("LorentzMedium: rho must be > 0 (negative mass density makes the vacuum unstable)");
    }

    bool coupled() const { return alpha != 0.0 && omega0 > 0.0; }

    // Rabi energy of the homogeneous bulk medium, |Omega| = alpha / sqrt(rho * eps_b).
    double rabi_energy() const { return alpha / std::sqrt(rho * eps_b); }
};

// Eliminates the matter field into a frequency-dependent permittivity:
// eps(omega) = eps_b + i eps_bI + alpha^2 / (eps0 rho (omega0^2 - 2 i gamma_x omega - omega^2)).
cplx effective_permittivity(const LorentzMedium& m, cplx omega, double pole_tol = 1e-9);

enum class Termination { Outgoing, PerfectMirror, Periodic };

struct Pml {
    double thickness_nm = 0.0;
    cplx stretch{1.0, 0.0};  // complex coordinate stretch inside the layer
};

struct Layer {
    double thickness_nm = 0.0;
    LorentzMedium medium;
};

struct LayerStack {
    std::vector<Layer> layers;
    Termination termination = Termination::Outgoing;
    std::optional<Pml> pml;

    void validate() const {
        for (const auto& l : layers) {
            if (l.thickness_nm <= 0.0) throw ConfigError("LayerStack: layer thickness must be > 0");
            l.medium.validate();
        }
    }

    double total_thickness() const {
        double t = 0.0;
        for (const auto& l : layers) t += l.thickness_nm;
        return t;
    }

    // Medium at position z, with z = 0 at the left edge of the first layer.
    // Outside the stack returns vacuum.
    const LorentzMedium& medium_at(double z) const;
};

}  // namespace polarion::maxwell
