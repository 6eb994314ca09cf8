#include "polarion/maxwell/transfer_matrix.hpp"

#include <cmath>

#include "polarion/numerics/contour_roots.hpp"

namespace polarion::maxwell {

namespace {

cplx layer_wavenumber(const LorentzMedium& m, cplx omega) {
    return omega * std::sqrt(effective_permittivity(m, omega)) / units::hbar_c;
}

Matrix2c interface_matrix(cplx k1, cplx k2) {
    cplx r = k1 / k2;
    Matrix2c m;
    m << 0.5 * (1.0 + r), 0.5 * (1.0 - r), 0.5 * (1.0 - r), 0.5 * (1.0 + r);
    return m;
}

Matrix2c phase_matrix(cplx k, double d) {
    cplx ph = std::exp(cplx(0.0, 1.0) * k * d);
    Matrix2c m;
    m << ph, 0.0, 0.0, 1.0 / ph;
    return m;
}

const LorentzMedium kVacuum{};

}  // namespace

Matrix2c transfer_matrix(const LayerStack& stack, cplx omega) {
    Matrix2c m = Matrix2c::Identity();
    cplx k_prev = layer_wavenumber(kVacuum, omega);
    for (const auto& layer : stack.layers) {
        cplx k = layer_wavenumber(layer.medium, omega);
        m = phase_matrix(k, layer.thickness_nm) * interface_matrix(k_prev, k) * m;
        k_prev = k;
    }
    cplx k_out = layer_wavenumber(kVacuum, omega);
    m = interface_matrix(k_prev, k_out) * m;
    return m;
}

cplx outgoing_characteristic(const LayerStack& stack, cplx omega) {
    return transfer_matrix(stack, omega)(1, 1);
}

cplx mirror_characteristic(const LayerStack& stack, cplx omega) {
    Eigen::Vector2cd amp(1.0, -1.0);  // E = 0 at the left wall
    cplx k_prev{0.0, 0.0};
    bool first = true;
    for (const auto& layer : stack.layers) {
        cplx k = layer_wavenumber(layer.medium, omega);
        if (!first) amp = interface_matrix(k_prev, k) * amp;
        amp = phase_matrix(k, layer.thickness_nm) * amp;
        k_prev = k;
        first = false;
    }
    return amp(0) + amp(1);
}

QnmMode sample_mode_profile(const LayerStack& stack, cplx omega, std::size_t n_points) {
    // Per-layer amplitudes referenced to the layer start.
    std::vector<Eigen::Vector2cd> amps;
    std::vector<cplx> ks;
    std::vector<double> starts;
    Eigen::Vector2cd amp;
    cplx k_prev;
    bool outgoing = stack.termination == Termination::Outgoing;
    if (outgoing) {
        amp = Eigen::Vector2cd(0.0, 1.0);  // left-going wave in the left vacuum
        k_prev = layer_wavenumber(kVacuum, omega);
    } else {
        amp = Eigen::Vector2cd(1.0, -1.0);
    }
    double z0 = 0.0;
    bool first = true;
    for (const auto& layer : stack.layers) {
        cplx k = layer_wavenumber(layer.medium, omega);
        if (outgoing || !first) amp = interface_matrix(k_prev, k) * amp;
        amps.push_back(amp);
        ks.push_back(k);
        starts.push_back(z0);
        amp = phase_matrix(k, layer.thickness_nm) * amp;
        k_prev = k;
        z0 += layer.thickness_nm;
        first = false;
    }

    QnmMode mode;
    mode.omega = omega;
    mode.z_min = 0.0;
    double length = stack.total_thickness();
    mode.dz = length / static_cast<double>(n_points - 1);
    mode.e_profile.resize(n_points);
    mode.x_profile.resize(n_points);
    std::size_t li = 0;
    for (std::size_t i = 0; i < n_points; ++i) {
        double z = mode.z_at(i);
        while (li + 1 < amps.size() && z >= starts[li + 1]) ++li;
        const cplx k = ks[li];
        const double dz_local = z - starts[li];
        cplx e = amps[li](0) * std::exp(cplx(0.0, 1.0) * k * dz_local) +
                 amps[li](1) * std::exp(cplx(0.0, -1.0) * k * dz_local);
        mode.e_profile[i] = e;
        const LorentzMedium& m = stack.layers[li].medium;
        if (m.coupled()) {
            cplx denom =
                m.omega0 * m.omega0 - cplx(0.0, 2.0 * m.gamma_x) * omega - omega * omega;
            mode.x_profile[i] = m.alpha * e / (m.rho * denom);
        } else {
            mode.x_profile[i] = 0.0;
        }
    }
    return mode;
}

namespace {

// The contour count breaks at the matter-resonance poles of the effective
// permittivity (the characteristic has an essential singularity there), so
// the search region is cut into rectangles that keep a small square around
// each pole outside every contour.
std::vector<QnmSearchRegion> pole_free_regions(const LayerStack& stack,
                                               const QnmSearchRegion& region) {
    std::vector<cplx> poles;
    for (const auto& layer : stack.layers) {
        const LorentzMedium& m = layer.medium;
        if (!m.coupled()) continue;
        double re = std::sqrt(std::max(m.omega0 * m.omega0 - m.gamma_x * m.gamma_x, 0.0));
        cplx p(re, -m.gamma_x);
        bool dup = false;
        for (cplx q : poles) {
            if (std::abs(q - p) < 1e-12 * std::abs(p)) dup = true;
        }
        if (!dup) poles.push_back(p);
    }
    std::vector<QnmSearchRegion> work{region};
    double gap = 2e-3 * std::max(region.re_max - region.re_min, region.im_max - region.im_min);
    for (cplx p : poles) {
        std::vector<QnmSearchRegion> next;
        for (const auto& r : work) {
            bool inside = p.real() > r.re_min - gap && p.real() < r.re_max + gap &&
                          p.imag() > r.im_min - gap && p.imag() < r.im_max + gap;
            if (!inside) {
                next.push_back(r);
                continue;
            }
            double re_lo = p.real() - gap, re_hi = p.real() + gap;
            double im_lo = p.imag() - gap, im_hi = p.imag() + gap;
            if (re_lo > r.re_min) next.push_back({r.re_min, re_lo, r.im_min, r.im_max});
            if (re_hi < r.re_max) next.push_back({re_hi, r.re_max, r.im_min, r.im_max});
            double mid_lo = std::max(re_lo, r.re_min), mid_hi = std::min(re_hi, r.re_max);
            if (im_lo > r.im_min) next.push_back({mid_lo, mid_hi, r.im_min, im_lo});
            if (im_hi < r.im_max) next.push_back({mid_lo, mid_hi, im_hi, r.im_max});
        }
        work = std::move(next);
    }
    return work;
}

}  // namespace

std::vector<QnmMode> find_qnms(const LayerStack& stack, const QnmSearchRegion& region,
                               std::size_t max_modes, std::size_t profile_points) {
    stack.validate();
    numerics::AnalyticFn f;
    switch (stack.termination) {
        case Termination::Outgoing:
            f = [&stack](cplx w) { return outgoing_characteristic(stack, w); };
            break;
        case Termination::PerfectMirror:
            f = [&stack](cplx w) { return mirror_characteristic(stack, w); };
            break;
        default:
            throw ConfigError("find_qnms: periodic termination is not supported");
    }
    std::vector<cplx> roots;
    auto regions = pole_free_regions(stack, region);
    for (const auto& r : regions) {
        try {
            auto part = numerics::find_roots(f, r.re_min, r.re_max, r.im_min, r.im_max);
            roots.insert(roots.end(), part.begin(), part.end());
        } catch (const NoRootsFound&) {
        }
    }
    if (roots.empty()) throw NoRootsFound("find_qnms: no eigenfrequencies in the search region");
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
    if (roots.size() > max_modes) roots.resize(max_modes);
    std::vector<QnmMode> modes;
    modes.reserve(roots.size());
    for (cplx w : roots) {
        modes.push_back(normalize_mode(sample_mode_profile(stack, w, profile_points), stack));
    }
    return modes;
}

}  // namespace polarion::maxwell
