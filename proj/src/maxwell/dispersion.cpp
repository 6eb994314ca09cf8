#include "polarion/maxwell/dispersion.hpp"

#include <Eigen/Dense>

namespace polarion::maxwell {

namespace {

// Quartic coefficients c0..c4 of
//  w^2 ((eps_b + i eps_bI)(w0^2 - 2 i gx w - w^2) + alpha^2/rho)
//  - k^2 (hbar c)^2 (w0^2 - 2 i gx w - w^2) = 0
std::array<cplx, 5> dispersion_poly(double k, const LorentzMedium& m) {
    const cplx eps(m.eps_b, m.eps_bI);
    const double w0sq = m.omega0 * m.omega0;
    const cplx two_i_g(0.0, 2.0 * m.gamma_x);
    const double kk = k * k * units::hbar_c * units::hbar_c / units::eps0;
    const double a2r = m.alpha * m.alpha / m.rho;
    std::array<cplx, 5> c{};
    // eps * (w0^2 w^2 - 2 i gx w^3 - w^4) + a2r w^2 - kk w0^2 + kk 2 i gx w + kk w^2
    c[4] = -eps;
    c[3] = -eps * two_i_g;
    c[2] = eps * w0sq + a2r + kk;
    c[1] = kk * two_i_g;
    c[0] = -kk * w0sq;
    return c;
}

}  // namespace

cplx dispersion_residual(double k, const LorentzMedium& m, cplx omega) {
    auto c = dispersion_poly(k, m);
    cplx acc = 0.0;
    for (int p = 4; p >= 0; --p) acc = acc * omega + c[p];
    return acc;
}

std::vector<cplx> bulk_polariton_dispersion(double k, const LorentzMedium& m) {
    if (k < 0.0) throw ConfigError("bulk_polariton_dispersion: k must be >= 0");
    auto c = dispersion_poly(k, m);
    int deg = 4;
    while (deg > 0 && std::abs(c[deg]) == 0.0) --deg;
    if (deg == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
    std::sort(roots.begin(), roots.end(),
              [](cplx a, cplx b) { return a.real() < b.real(); });
    return roots;
}

}  // namespace polarion::maxwell
