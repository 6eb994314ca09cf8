#include "polarion/maxwell/fd_helmholtz.hpp"

#include <algorithm>
#include <cmath>

#include "polarion/numerics/arnoldi.hpp"

namespace polarion::maxwell {

namespace {

using numerics::SparseC;
using Triplet = Eigen::Triplet<cplx>;

const LorentzMedium kVacuum{};

// Node positions aligned with every layer / buffer / PML boundary, so the
// piecewise-constant medium is unambiguous per cell. The spacing is uniform
// within each segment and close to the requested global spacing.
struct FdGrid {
    std::vector<double> z;                         // nodes
    std::vector<const LorentzMedium*> cell_medium; // medium of cell [z_i, z_{i+1}]
    double pml_left_end = 0.0;
    double pml_right_start = 0.0;
    cplx stretch{1.0, 0.0};
    bool has_pml = false;

    std::size_t n_nodes() const { return z.size(); }

    double max_h() const {
        double h = 0.0;
        for (std::size_t i = 0; i + 1 < z.size(); ++i) h = std::max(h, z[i + 1] - z[i]);
        return h;
    }

    cplx s(double z_pos) const {
        if (!has_pml) return {1.0, 0.0};
        if (z_pos < pml_left_end) {
            double t = (pml_left_end - z_pos) / (pml_left_end - z.front());
            return 1.0 + (stretch - 1.0) * t * t;
        }
        if (z_pos > pml_right_start) {
            double t = (z_pos - pml_right_start) / (z.back() - pml_right_start);
            return 1.0 + (stretch - 1.0) * t * t;
        }
        return {1.0, 0.0};
    }
};

FdGrid make_grid(const LayerStack& stack, std::size_t n_points) {
    struct Segment {
        double length;
        const LorentzMedium* medium;
    };
    std::vector<Segment> segs;
    double z_start = 0.0;
    FdGrid g;
    if (stack.termination == Termination::Outgoing) {
        if (!stack.pml) {
            throw ConfigError("fd_helmholtz_qnm: outgoing termination requires a PML");
        }
        double pml_t = stack.pml->thickness_nm;
        double gap = 0.5 * pml_t;  // vacuum buffer between stack and PML
        segs.push_back({pml_t, &kVacuum});
        segs.push_back({gap, &kVacuum});
        z_start = -(gap + pml_t);
        g.pml_left_end = -gap;
        g.pml_right_start = stack.total_thickness() + gap;
        g.stretch = stack.pml->stretch;
        g.has_pml = true;
    }
    for (const auto& layer : stack.layers) segs.push_back({layer.thickness_nm, &layer.medium});
    if (g.has_pml) {
        double pml_t = stack.pml->thickness_nm;
        segs.push_back({0.5 * pml_t, &kVacuum});
        segs.push_back({pml_t, &kVacuum});
    }
    double total = 0.0;
    for (const auto& s : segs) total += s.length;
    double h0 = total / static_cast<double>(n_points - 1);

    g.z.push_back(z_start);
    double z0 = z_start;
    for (const auto& seg : segs) {
        auto cells = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(seg.length / h0)));
        double h = seg.length / static_cast<double>(cells);
        for (std::size_t c = 1; c <= cells; ++c) {
            g.z.push_back(z0 + h * static_cast<double>(c));
            g.cell_medium.push_back(seg.medium);
        }
        z0 += seg.length;
    }
    return g;
}

struct FdModeSet {
    std::vector<cplx> omegas;
    std::vector<QnmMode> modes;
};

FdModeSet solve_fd(const LayerStack& stack, std::size_t n_points, const QnmSearchRegion& region,
                   std::size_t max_modes) {
    FdGrid grid = make_grid(stack, n_points);
    const std::size_t n_nodes = grid.n_nodes();
    const std::size_t n_int = n_nodes - 2;  // Dirichlet ends

    // X degrees of freedom wherever either adjacent cell is coupled.
    std::vector<int> x_index(n_nodes, -1);
    std::vector<const LorentzMedium*> x_medium(n_nodes, nullptr);
    std::size_t n_x = 0;
    for (std::size_t i = 1; i + 1 < n_nodes; ++i) {
        const LorentzMedium* ml = grid.cell_medium[i - 1];
        const LorentzMedium* mr = grid.cell_medium[i];
        if (ml->coupled() || mr->coupled()) {
            x_index[i] = static_cast<int>(n_x++);
            x_medium[i] = ml->coupled() ? ml : mr;
        }
    }

    // Variable layout: [E (n_int), X (n_x), u (n_int), w (n_x)]
    const std::size_t off_x = n_int, off_u = n_int + n_x, off_w = 2 * n_int + n_x;
    const std::size_t dim = 2 * (n_int + n_x);

    std::vector<Triplet> ta, tb;
    const double hc2 = units::hbar_c * units::hbar_c;
    auto eidx = [&](std::size_t node) { return static_cast<int>(node - 1); };

    for (std::size_t i = 1; i + 1 < n_nodes; ++i) {
        const double zi = grid.z[i];
        const double h_m = grid.z[i] - grid.z[i - 1];
        const double h_p = grid.z[i + 1] - grid.z[i];
        const double h_bar = 0.5 * (h_m + h_p);
        const LorentzMedium& ml = *grid.cell_medium[i - 1];
        const LorentzMedium& mr = *grid.cell_medium[i];
        const int ei = eidx(i);
        // u = omega E
        ta.emplace_back(static_cast<int>(off_u) + ei, static_cast<int>(off_u) + ei, 1.0);
        tb.emplace_back(static_cast<int>(off_u) + ei, ei, 1.0);
        // Helmholtz row: -(hc)^2 (1/s) d/dz (1/s) dE/dz = omega (eps u + alpha w),
        // with half-cell-weighted eps and alpha at material interfaces.
        cplx si = grid.s(zi);
        cplx sp = grid.s(zi + 0.5 * h_p);
        cplx sm = grid.s(zi - 0.5 * h_m);
        cplx c_m = 1.0 / (si * sm * h_m * h_bar);
        cplx c_p = 1.0 / (si * sp * h_p * h_bar);
        if (i > 1) ta.emplace_back(ei, eidx(i - 1), -hc2 * c_m);
        ta.emplace_back(ei, ei, hc2 * (c_m + c_p));
        if (i + 2 < n_nodes) ta.emplace_back(ei, eidx(i + 1), -hc2 * c_p);
        cplx eps = (h_m * cplx(ml.eps_b, ml.eps_bI) + h_p * cplx(mr.eps_b, mr.eps_bI)) /
                   (2.0 * h_bar);
        tb.emplace_back(ei, static_cast<int>(off_u) + ei, eps / units::eps0);
        if (x_index[i] >= 0) {
            int xi = x_index[i];
            const LorentzMedium& mx = *x_medium[i];
            double alpha = (h_m * (ml.coupled() ? ml.alpha : 0.0) +
                            h_p * (mr.coupled() ? mr.alpha : 0.0)) /
                           (2.0 * h_bar);
            tb.emplace_back(ei, static_cast<int>(off_w) + xi, cplx(alpha / units::eps0));
            // w = omega X
            ta.emplace_back(static_cast<int>(off_w) + xi, static_cast<int>(off_w) + xi, 1.0);
            tb.emplace_back(static_cast<int>(off_w) + xi, static_cast<int>(off_x) + xi, 1.0);
            // matter row: w0^2 X - (alpha/rho) E = omega (w + 2 i gamma X)
            int xrow = static_cast<int>(off_x) + xi;
            ta.emplace_back(xrow, static_cast<int>(off_x) + xi, cplx(mx.omega0 * mx.omega0));
            ta.emplace_back(xrow, ei, cplx(-mx.alpha / mx.rho));
            tb.emplace_back(xrow, static_cast<int>(off_w) + xi, 1.0);
            if (mx.gamma_x != 0.0) {
                tb.emplace_back(xrow, static_cast<int>(off_x) + xi, cplx(0.0, 2.0 * mx.gamma_x));
            }
        }
    }
    SparseC a(dim, dim), b(dim, dim);
    a.setFromTriplets(ta.begin(), ta.end());
    b.setFromTriplets(tb.begin(), tb.end());

    // Shifts spanning the real window; imaginary part from the window middle.
    double im_mid = 0.5 * (region.im_min + region.im_max);
    if (im_mid == 0.0) im_mid = -1e-4 * std::max(std::abs(region.re_max), 1.0);
    int n_shifts = std::clamp<int>(static_cast<int>(max_modes), 3, 8);
    std::vector<std::pair<cplx, Eigen::VectorXcd>> found;
    for (int si = 0; si < n_shifts; ++si) {
        double re = region.re_min +
                    (region.re_max - region.re_min) * (si + 0.5) / n_shifts;
        cplx sigma(re, im_mid);
        std::vector<numerics::ShiftInvertResult> eigs;
        try {
            eigs = numerics::shift_invert_eigs(a, b, sigma, 10, 70);
        } catch (const NumericalError&) {
            continue;
        }
        for (auto& e : eigs) {
            cplx w = e.eigenvalue;
            if (w.real() < region.re_min || w.real() > region.re_max) continue;
            if (w.imag() < region.im_min || w.imag() > region.im_max) continue;
            bool dup = false;
            for (auto& [w0, v0] : found) {
                if (std::abs(w - w0) < 1e-7 * std::max(std::abs(w0), 1.0)) dup = true;
            }
            if (!dup) found.emplace_back(w, std::move(e.vector));
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first.real() < y.first.real(); });
    if (found.size() > max_modes) found.resize(max_modes);

    FdModeSet out;
    for (auto& [w, vec] : found) {
        // Resample onto a uniform grid for the mode container.
        QnmMode mode;
        mode.omega = w;
        mode.z_min = grid.z.front();
        mode.dz = (grid.z.back() - grid.z.front()) / static_cast<double>(n_nodes - 1);
        mode.e_profile.assign(n_nodes, 0.0);
        mode.x_profile.assign(n_nodes, 0.0);
        auto value_at = [&](std::size_t node, std::size_t offset, const std::vector<int>* idx) {
            if (node == 0 || node + 1 >= n_nodes) return cplx(0.0, 0.0);
            if (idx) {
                int k = (*idx)[node];
                return k >= 0 ? cplx(vec[offset + k]) : cplx(0.0, 0.0);
            }
            return cplx(vec[offset + eidx(node)]);
        };
        std::size_t cell = 0;
        for (std::size_t i = 0; i < n_nodes; ++i) {
            double zq = mode.z_at(i);
            while (cell + 2 < n_nodes && grid.z[cell + 1] <= zq) ++cell;
            double t = (zq - grid.z[cell]) / (grid.z[cell + 1] - grid.z[cell]);
            t = std::clamp(t, 0.0, 1.0);
            mode.e_profile[i] = (1.0 - t) * value_at(cell, 0, nullptr) +
                                t * value_at(cell + 1, 0, nullptr);
            mode.x_profile[i] = (1.0 - t) * value_at(cell, off_x, &x_index) +
                                t * value_at(cell + 1, off_x, &x_index);
        }
        out.omegas.push_back(w);
        out.modes.push_back(normalize_mode(std::move(mode), stack));
    }
    return out;
}

}  // namespace

std::vector<QnmMode> fd_helmholtz_qnm(const LayerStack& stack, std::size_t grid_points,
                                      const QnmSearchRegion& region, std::size_t max_modes,
                                      bool self_check, double self_check_tol) {
    stack.validate();
    if (grid_points < 16) throw ResolutionTooCoarse("fd_helmholtz_qnm: too few grid points");

    // Require >= 20 points per shortest wavelength in the window.
    double n_max_index = 1.0;
    for (const auto& l : stack.layers) {
        n_max_index = std::max(n_max_index, std::sqrt(l.medium.eps_b));
    }
    double lambda_min = 2.0 * M_PI * units::hbar_c / (std::abs(region.re_max) * n_max_index);
    FdGrid probe = make_grid(stack, grid_points);
    if (probe.max_h() > lambda_min / 20.0) {
        throw ResolutionTooCoarse("fd_helmholtz_qnm: grid coarser than 20 points per wavelength");
    }

    auto coarse = solve_fd(stack, grid_points, region, max_modes);
    if (self_check) {
        auto fine = solve_fd(stack, 2 * grid_points - 1, region, max_modes);
        for (cplx w : coarse.omegas) {
            double best = 1e300;
            for (cplx wf : fine.omegas) best = std::min(best, std::abs(w - wf));
            if (best > self_check_tol * std::abs(w)) {
                throw ResolutionTooCoarse(
                    "fd_helmholtz_qnm: grid-doubling self-check exceeded tolerance");
            }
        }
    }
    return std::move(coarse.modes);
}

}  // namespace polarion::maxwell
