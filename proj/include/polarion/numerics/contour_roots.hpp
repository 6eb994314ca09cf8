#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace polarion::numerics {

using cplx = std::complex<double>;
using AnalyticFn = std::function<cplx(cplx)>;

struct ContourOptions {
    double newton_rel_tol = 1e-12;  // relative tolerance on the root location
    int max_depth = 40;             // rectangle subdivision depth
    int max_newton_iter = 100;
    int min_edge_samples = 32;      // initial samples per rectangle edge
    double min_box_size = 1e-13;    // relative to the initial box diagonal
};

// Winding number of f around the rectangle [re_min, re_max] x [im_min, im_max].
// Edge sampling is refined until the phase increment between neighboring
// samples stays below pi/2.
int argument_principle_count(const AnalyticFn& f, double re_min, double re_max,
                             double im_min, double im_max, int min_samples = 32);

// All roots of f inside the rectangle, found by recursive subdivision of the
// argument-principle count down to single-root cells followed by Newton
// refinement with a numerical derivative. Cells are processed in parallel.
// Throws RootCountMismatch if Newton refinement loses roots that the contour
// count located, and NoRootsFound if the region contains none.
std::vector<cplx> find_roots(const AnalyticFn& f, double re_min, double re_max,
                             double im_min, double im_max,
                             const ContourOptions& opt = {});

}  // namespace polarion::numerics
