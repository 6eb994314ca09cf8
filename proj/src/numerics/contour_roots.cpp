#include "polarion/numerics/contour_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polarion/errors.hpp"

namespace polarion::numerics {

namespace {

// Accumulated phase change of f along the segment [a, b], refined until each
// step turns by less than pi/2.
double phase_change(const AnalyticFn& f, cplx a, cplx b, int min_samples, int depth = 0) {
    int n = std::max(min_samples, 2);
    for (int attempt = 0; attempt < 14; ++attempt) {
        double total = 0.0;
        bool ok = true;
        cplx prev = f(a);
        for (int i = 1; i <= n; ++i) {
            cplx z = a + (b - a) * (static_cast<double>(i) / n);
            cplx cur = f(z);
            if (prev == cplx(0.0, 0.0) || cur == cplx(0.0, 0.0)) {
                ok = false;  // hit a zero on the contour; caller nudges the box
                break;
            }
            double d = std::arg(cur / prev);
            if (std::abs(d) > 1.5) {  // resolution too coarse to trust
                ok = false;
                break;
            }
            total += d;
            prev = cur;
        }
        if (ok) return total;
        n *= 2;
    }
    throw NumericalError("contour phase tracking failed to converge (zero on or near contour?)");
    (void)depth;
}

struct Box {
    double re_min, re_max, im_min, im_max;
    double width() const { return re_max - re_min; }
    double height() const { return im_max - im_min; }
    cplx center() const { return {0.5 * (re_min + re_max), 0.5 * (im_min + im_max)}; }
};

int count_in_box(const AnalyticFn& f, const Box& b, int min_samples) {
    cplx c1(b.re_min, b.im_min), c2(b.re_max, b.im_min), c3(b.re_max, b.im_max),
        c4(b.re_min, b.im_max);
    double total = phase_change(f, c1, c2, min_samples) + phase_change(f, c2, c3, min_samples) +
                   phase_change(f, c3, c4, min_samples) + phase_change(f, c4, c1, min_samples);
    return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

cplx numerical_derivative(const AnalyticFn& f, cplx z, double scale) {
    double h = std::max(1e-7 * scale, 1e-12);
    return (f(z + cplx(h, 0.0)) - f(z - cplx(h, 0.0))) / cplx(2.0 * h, 0.0);
}

bool newton_polish(const AnalyticFn& f, cplx& z, double scale, const ContourOptions& opt) {
    for (int it = 0; it < opt.max_newton_iter; ++it) {
        cplx fz = f(z);
        cplx dfz = numerical_derivative(f, z, scale);
        if (dfz == cplx(0.0, 0.0)) return false;
        cplx step = fz / dfz;
        z -= step;
        if (std::abs(step) < opt.newton_rel_tol * std::max(std::abs(z), scale * 1e-3)) {
            return true;
        }
    }
    return false;
}

void subdivide(const AnalyticFn& f, const Box& box, int depth, const ContourOptions& opt,
               double scale, std::vector<Box>& single_root_cells) {
    int count;
    try {
        count = count_in_box(f, box, opt.min_edge_samples);
    } catch (const NumericalError&) {
        // a zero sits (nearly) on the contour; nudge the box outward slightly
        Box nudged = box;
        double eps = 1e-6 * scale * (1 + depth);
        nudged.re_min -= eps;
        nudged.re_max += eps;
        nudged.im_min -= eps;
        nudged.im_max += eps;
        count = count_in_box(f, nudged, opt.min_edge_samples);
    }
    if (count <= 0) return;
    double diag = std::hypot(box.width(), box.height());
    if (count == 1 || depth >= opt.max_depth || diag < opt.min_box_size * scale) {
        single_root_cells.push_back(box);
        return;
    }
    // split along the longer edge
    if (box.width() >= box.height()) {
        double mid = 0.5 * (box.re_min + box.re_max);
        subdivide(f, {box.re_min, mid, box.im_min, box.im_max}, depth + 1, opt, scale,
                  single_root_cells);
        subdivide(f, {mid, box.re_max, box.im_min, box.im_max}, depth + 1, opt, scale,
                  single_root_cells);
    } else {
        double mid = 0.5 * (box.im_min + box.im_max);
        subdivide(f, {box.re_min, box.re_max, box.im_min, mid}, depth + 1, opt, scale,
                  single_root_cells);
        subdivide(f, {box.re_min, box.re_max, mid, box.im_max}, depth + 1, opt, scale,
                  single_root_cells);
    }
}

// Safeguarded fallback when Newton escapes a single-root cell: halve the
// cell along its longer edge, keeping the half whose contour count stays 1,
// until Newton converges inside or the cell is tiny enough to trust.
cplx bisect_root(const AnalyticFn& f, Box box, double scale, const ContourOptions& opt) {
    for (int it = 0; it < 60; ++it) {
        cplx z = box.center();
        if (newton_polish(f, z, scale, opt) && z.real() >= box.re_min - 1e-9 * scale &&
            z.real() <= box.re_max + 1e-9 * scale && z.imag() >= box.im_min - 1e-9 * scale &&
            z.imag() <= box.im_max + 1e-9 * scale) {
            return z;
        }
        if (std::hypot(box.width(), box.height()) < opt.newton_rel_tol * scale) {
            return box.center();
        }
        Box a = box, b = box;
        if (box.width() >= box.height()) {
            double mid = 0.5 * (box.re_min + box.re_max);
            a.re_max = mid;
            b.re_min = mid;
        } else {
            double mid = 0.5 * (box.im_min + box.im_max);
            a.im_max = mid;
            b.im_min = mid;
        }
        int ca;
        try {
            ca = count_in_box(f, a, opt.min_edge_samples);
        } catch (const NumericalError&) {
            ca = -1;  // root on the split line; fall over to the other half
        }
        box = (ca == 1) ? a : b;
    }
    throw RootCountMismatch("bisection fallback failed to isolate the root");
}

}  // namespace

int argument_principle_count(const AnalyticFn& f, double re_min, double re_max, double im_min,
                             double im_max, int min_samples) {
    return count_in_box(f, {re_min, re_max, im_min, im_max}, min_samples);
}

std::vector<cplx> find_roots(const AnalyticFn& f, double re_min, double re_max, double im_min,
                             double im_max, const ContourOptions& opt) {
    Box root_box{re_min, re_max, im_min, im_max};
    double scale = std::max({std::abs(re_min), std::abs(re_max), std::abs(im_min),
                             std::abs(im_max), 1.0});

    // authoritative total against which the polished roots are checked
    int total;
    try {
        total = count_in_box(f, root_box, opt.min_edge_samples);
    } catch (const NumericalError&) {
        Box nudged = root_box;
        double eps = 1e-6 * scale;
        nudged.re_min -= eps;
        nudged.re_max += eps;
        nudged.im_min -= eps;
        nudged.im_max += eps;
        total = count_in_box(f, nudged, opt.min_edge_samples);
    }
    if (total <= 0) throw NoRootsFound("no roots inside the search region");

    std::vector<Box> cells;
    subdivide(f, root_box, 0, opt, scale, cells);
    if (cells.empty()) throw NoRootsFound("no roots inside the search region");

    // Newton from the center plus four interior points per cell; failures in
    // the callback are collected, never thrown across the parallel region.
    std::vector<std::vector<cplx>> found(cells.size());
    std::string first_error;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i) {
        const Box& b = cells[i];
        const double starts[5][2] = {{0.5, 0.5}, {0.25, 0.25}, {0.75, 0.25},
                                     {0.25, 0.75}, {0.75, 0.75}};
        bool inside = false;
        for (const auto& s : starts) {
            cplx z(b.re_min + s[0] * b.width(), b.im_min + s[1] * b.height());
            try {
                if (newton_polish(f, z, scale, opt)) {
                    found[i].push_back(z);
                    // prefer a root that stayed inside its own cell
                    double m = 1e-9 * scale;
                    if (z.real() >= b.re_min - m && z.real() <= b.re_max + m &&
                        z.imag() >= b.im_min - m && z.imag() <= b.im_max + m) {
                        inside = true;
                        break;
                    }
                }
            } catch (const std::exception& e) {
#pragma omp critical
                if (first_error.empty()) first_error = e.what();
            }
        }
        if (!inside) {
            try {
                found[i].push_back(bisect_root(f, b, scale, opt));
            } catch (const std::exception& e) {
#pragma omp critical
                if (first_error.empty()) first_error = e.what();
            }
        }
    }

    std::vector<cplx> result;
    double box_margin = 1e-7 * scale;
    for (const auto& cell_roots : found) {
        for (cplx z : cell_roots) {
            if (z.real() < root_box.re_min - box_margin || z.real() > root_box.re_max + box_margin ||
                z.imag() < root_box.im_min - box_margin || z.imag() > root_box.im_max + box_margin) {
                continue;
            }
            bool dup = false;
            for (const cplx& r : result) {
                if (std::abs(r - z) < 1e-8 * scale) dup = true;
            }
            if (!dup) result.push_back(z);
        }
    }
    if (static_cast<int>(result.size()) < total) {
        std::string msg = "Newton refinement lost roots located by the contour count";
        if (!first_error.empty()) msg += " (" + first_error + ")";
        throw RootCountMismatch(msg);
    }
    std::sort(result.begin(), result.end(),
              [](cplx a, cplx b) { return a.real() < b.real(); });
    return result;
}

}  // namespace polarion::numerics
