#include "polarion/interactions/interactions.hpp"

#include <cmath>

namespace polarion::interactions {

double overlap_integral(const std::vector<cplx>& x_i, const std::vector<cplx>& x_j,
                        double dz, int dim) {
    if (x_i.size() != x_j.size() || x_i.empty()) {
        throw GridMismatch("overlap_integral: profiles must share a non-empty grid");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < x_i.size(); ++k) {
        double val = std::norm(x_i[k]) * std::norm(x_j[k]);
        double w = (k == 0 || k + 1 == x_i.size()) ? 0.5 : 1.0;
        acc += w * val;
    }
    acc *= dz;
    return std::pow(acc, double(dim));
}

InteractionMatrix interaction_matrix(double g, const std::vector<maxwell::QnmMode>& modes,
                                     int dim) {
    const int n = static_cast<int>(modes.size());
    InteractionMatrix m;
    m.dimensionality = dim;
    m.u.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (modes[i].size() != modes[j].size() || modes[i].dz != modes[j].dz) {
                throw GridMismatch("interaction_matrix: modes sampled on different grids");
            }
            double v = g * overlap_integral(modes[i].x_profile, modes[j].x_profile,
                                            modes[i].dz, dim);
            m.u(i, j) = v;
            m.u(j, i) = v;
        }
    }
    return m;
}

double uniform_flake_u(double g_2d, double fraction, double area) {
    if (area <= 0.0) throw ConfigError("uniform_flake_u: area must be > 0");
    return g_2d * fraction * fraction / area;
}

}  // namespace polarion::interactions
