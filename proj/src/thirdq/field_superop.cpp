#include "polarion/thirdq/field_superop.hpp"

#include <cmath>
#include <string>

namespace polarion::thirdq {

FieldSuperoperators field_superoperator_coefficients(
    const std::vector<maxwell::QnmMode>& modes, const RapiditySpectrum& spec,
    double rel_tol) {
    if (modes.size() != spec.omegas.size()) {
        throw UnmatchedMode("field_superoperator_coefficients: mode and rapidity counts differ");
    }
    FieldSuperoperators out;
    std::vector<bool> used(modes.size(), false);
    for (std::size_t r = 0; r < spec.omegas.size(); ++r) {
        cplx w = spec.omegas[r];
        int found = -1;
        for (std::size_t j = 0; j < modes.size(); ++j) {
            double rel = std::abs(modes[j].omega - w) / std::max(std::abs(w), 1e-300);
            if (rel < rel_tol) {
                if (found >= 0) {
                    throw UnmatchedMode("field_superoperator_coefficients: ambiguous match for rapidity " +
                                        std::to_string(r));
                }
                found = static_cast<int>(j);
            }
        }
        if (found < 0 || used[found]) {
            throw UnmatchedMode("field_superoperator_coefficients: no unique classical mode for rapidity " +
                                std::to_string(r));
        }
        used[found] = true;
        out.mode_index.push_back(found);
        out.e_profiles.push_back(modes[found].e_profile);
        out.x_profiles.push_back(modes[found].x_profile);
    }
    return out;
}

cplx g1_two_point(const FieldSuperoperators& fields, int r, cplx alpha,
                  std::size_t i1, std::size_t i2, const MatrixXc& ness_occ) {
    cplx g1 = std::norm(alpha) * std::conj(fields.e_profiles[r][i1]) * fields.e_profiles[r][i2];
    const Eigen::Index n = ness_occ.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g1 += ness_occ(i, j) * std::conj(fields.e_profiles[i][i1]) * fields.e_profiles[j][i2];
        }
    }
    return g1;
}

}  // namespace polarion::thirdq
