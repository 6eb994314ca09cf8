#include "polarion/maxwell/hopfield.hpp"

#include <cmath>

namespace polarion::maxwell {

HopfieldResult hopfield_eigen(const HopfieldParams& p) {
    p.validate();
    HopfieldResult r;
    double mean = 0.5 * (p.e_c + p.e_x);
    double det = 0.5 * std::hypot(p.e_c - p.e_x, p.omega_rabi);
    r.e_plus = mean + det;
    r.e_minus = mean - det;
    // lower-branch eigenvector of [[E_C, O/2], [O/2, E_X]]
    if (p.omega_rabi == 0.0) {
        if (p.e_c <= p.e_x) {
            r.c_coeff = 1.0;
            r.x_coeff = 0.0;
        } else {
            r.c_coeff = 0.0;
            r.x_coeff = 1.0;
        }
        return r;
    }
    double vx = r.e_minus - p.e_c;
    double vc = 0.5 * p.omega_rabi;
    double nrm = std::hypot(vc, vx);
    r.c_coeff = vc / nrm;
    r.x_coeff = vx / nrm;
    if (r.x_coeff < 0.0) {  // fix gauge: exciton amplitude positive
        r.c_coeff = -r.c_coeff;
        r.x_coeff = -r.x_coeff;
    }
    return r;
}

}  // namespace polarion::maxwell
