#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

#include "polarion/dissipative/two_mode.hpp"
#include "polarion/interactions/interactions.hpp"
#include "polarion/maxwell/mode.hpp"
#include "polarion/thirdq/fock.hpp"

using namespace polarion;
using dissipative::cplx;
using dissipative::MatrixXc;

namespace {

maxwell::QnmMode gaussian_mode(double sigma, double scale, std::size_t n, double half_width) {
    maxwell::QnmMode m;
    m.z_min = -half_width;
    m.dz = 2.0 * half_width / static_cast<double>(n - 1);
    m.e_profile.assign(n, 0.0);
    m.x_profile.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double z = m.z_at(i);
        m.x_profile[i] = scale * std::exp(-z * z / (2.0 * sigma * sigma));
    }
    return m;
}

dissipative::TwoModeModel fig_model() {
    dissipative::TwoModeModel m;
    m.j_coupling = 0.047;
    m.gamma = 0.0095;
    m.u11 = 0.171;
    m.u22 = 0.171;
    m.u12 = 0.11 * 0.171;
    m.delta = 0.02;
    m.pump_amp = 2e-3;
    m.n_max = 6;
    return m;
}

}  // namespace

TEST_CASE("overlap integral of uniform profiles is |X|^4 L, raised to the dimension") {
    std::size_t n = 101;
    double length = 50.0, dz = length / double(n - 1), amp = 0.7;
    std::vector<cplx> x(n, cplx(amp, 0.0));
    double base = std::pow(amp, 4) * length;
    CHECK(interactions::overlap_integral(x, x, dz, 1) == doctest::Approx(base).epsilon(1e-12));
    CHECK(interactions::overlap_integral(x, x, dz, 2) ==
          doctest::Approx(base * base).epsilon(1e-12));
    CHECK(interactions::overlap_integral(x, x, dz, 3) ==
          doctest::Approx(base * base * base).epsilon(1e-12));
}

TEST_CASE("overlap integral of disjoint profiles vanishes") {
    std::size_t n = 200;
    std::vector<cplx> a(n, 0.0), b(n, 0.0);
    for (std::size_t i = 0; i < 80; ++i) a[i] = 1.0;
    for (std::size_t i = 120; i < n; ++i) b[i] = 1.0;
    CHECK(interactions::overlap_integral(a, b, 0.1, 1) == 0.0);
}

TEST_CASE("overlap integral of a Gaussian matches the closed form") {
    double sigma = 3.0;
    auto m = gaussian_mode(sigma, 1.0, 4001, 10.0 * sigma);
    // int exp(-2 z^2 / sigma^2) dz = sigma sqrt(pi / 2)
    double want = sigma * std::sqrt(M_PI / 2.0);
    double got = interactions::overlap_integral(m.x_profile, m.x_profile, m.dz, 1);
    CHECK(got == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("interaction matrix scales as s^-dim under norm-preserving dilation") {
    double s = 2.7;
    auto base = gaussian_mode(2.0, 1.0, 2001, 24.0);
    auto scaled = gaussian_mode(2.0 * s, 1.0 / std::sqrt(s), 2001, 24.0 * s);
    for (int dim : {1, 2, 3}) {
        auto u0 = interactions::interaction_matrix(1.0, {base}, dim);
        auto us = interactions::interaction_matrix(1.0, {scaled}, dim);
        CHECK(us.u(0, 0) ==
              doctest::Approx(u0.u(0, 0) * std::pow(s, -double(dim))).epsilon(1e-6));
    }
}

TEST_CASE("interaction matrix is symmetric and obeys the Cauchy-Schwarz bound") {
    std::mt19937 rng(3);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<maxwell::QnmMode> modes(3);
    for (auto& m : modes) {
        m = gaussian_mode(3.0 + g(rng) * 0.5, 1.0, 501, 20.0);
        for (auto& x : m.x_profile) x *= 1.0 + 0.2 * g(rng);
    }
    auto u = interactions::interaction_matrix(0.8, modes, 1);
    CHECK((u.u - u.u.transpose()).norm() == doctest::Approx(0.0));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(u.u(i, j) * u.u(i, j) <= u.u(i, i) * u.u(j, j) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("interaction matrix rejects modes on mismatched grids") {
    auto a = gaussian_mode(2.0, 1.0, 501, 20.0);
    auto b = gaussian_mode(2.0, 1.0, 601, 20.0);
    CHECK_THROWS_AS(interactions::interaction_matrix(1.0, {a, b}, 1), GridMismatch);
}

TEST_CASE("uniform flake interaction constant and blueshift") {
    // 1 um^2 flake, 2% excitonic weight
    double u = interactions::uniform_flake_u(6.475e6, 0.02, 1e6);
    CHECK(u == doctest::Approx(2.59e-3).epsilon(1e-12));
    CHECK(interactions::vacuum_blueshift(u) == doctest::Approx(5.18e-3).epsilon(1e-12));
    CHECK_THROWS_AS(interactions::uniform_flake_u(1.0, 0.1, 0.0), ConfigError);
}

TEST_CASE("localized basis recovers (omega_LR, J, gamma) from the doublet") {
    cplx ws(1.547, -0.005), was(1.453, -0.004);
    auto b = dissipative::localized_basis(ws, was);
    CHECK(b.omega_lr == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(b.j_coupling == doctest::Approx(0.047).epsilon(1e-12));
    CHECK(b.gamma == doctest::Approx(0.009).epsilon(1e-12));
}

TEST_CASE("model validation rejects bad parameters and oversized cutoffs") {
    dissipative::TwoModeModel m = fig_model();
    m.gamma = 0.0;
    CHECK_THROWS_AS(m.validate(), ConfigError);
    m = fig_model();
    m.n_max = 2;
    CHECK_THROWS_AS(m.validate(), ConfigError);
    m = fig_model();
    m.mirror_symmetric = true;
    m.u22 = 0.3;
    CHECK_THROWS_AS(m.validate(), ConfigError);
    m = fig_model();
    m.n_max = 100;
    CHECK_THROWS_AS(dissipative::build_liouvillian(m), DimensionTooLarge);
}

TEST_CASE("undriven model relaxes to the vacuum") {
    dissipative::TwoModeModel m = fig_model();
    m.pump_amp = 0.0;
    auto ss = dissipative::steady_state(m);
    CHECK(ss.n_l < 1e-12);
    CHECK(ss.n_r < 1e-12);
    CHECK_THROWS_AS(dissipative::g2(ss, 0, 0), VacuousPopulation);
}

TEST_CASE("linear driven modes are coherent states with the Lorentzian population") {
    dissipative::TwoModeModel m;
    m.j_coupling = 0.0;
    m.gamma = 0.01;
    m.u11 = m.u22 = m.u12 = 0.0;
    m.delta = 0.012;
    m.pump_amp = 8e-4;
    m.n_max = 8;
    auto ss = dissipative::steady_state(m);
    double want = m.pump_amp * m.pump_amp /
                  (m.delta * m.delta + 0.25 * m.gamma * m.gamma);
    CHECK(ss.n_l == doctest::Approx(want).epsilon(1e-8));
    CHECK(ss.n_r == doctest::Approx(want).epsilon(1e-8));
    auto c = dissipative::correlations(ss);
    CHECK(c.g11 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.g22 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.g12 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(c.cs_ratio == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("steady state matches an independent dense Liouvillian at n_max = 3") {
    dissipative::TwoModeModel m = fig_model();
    m.n_max = 3;
    m.pump_amp = 1e-3;
    auto ss = dissipative::steady_state(m);

    // dense reference: H and dissipators assembled from scratch
    int d1 = m.n_max + 1;
    Eigen::Index d = d1 * d1;
    MatrixXc a1 = MatrixXc::Zero(d1, d1);
    for (int k = 1; k < d1; ++k) a1(k - 1, k) = std::sqrt(double(k));
    MatrixXc id1 = MatrixXc::Identity(d1, d1);
    auto kron = [](const MatrixXc& x, const MatrixXc& y) {
        MatrixXc out(x.rows() * y.rows(), x.cols() * y.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
            }
        }
        return out;
    };
    MatrixXc al = kron(a1, id1), ar = kron(id1, a1);
    MatrixXc nl = al.adjoint() * al, nr = ar.adjoint() * ar;
    MatrixXc idd = MatrixXc::Identity(d, d);
    MatrixXc h = m.delta * (nl + nr) + m.j_coupling * (al.adjoint() * ar + ar.adjoint() * al) +
                 0.5 * m.u11 * nl * (nl - idd) + 0.5 * m.u22 * nr * (nr - idd) +
                 m.u12 * nl * nr + m.pump_amp * (al + al.adjoint() + ar + ar.adjoint());
    MatrixXc liou = cplx(0.0, -1.0) * (kron(idd, h) - kron(h.transpose(), idd));
    for (const MatrixXc* a : {&al, &ar}) {
        MatrixXc ada = a->adjoint() * (*a);
        liou += m.gamma * (kron(a->conjugate(), *a) - 0.5 * kron(idd, ada) -
                           0.5 * kron(ada.transpose(), idd));
    }
    // kernel vector with unit trace
    Eigen::FullPivLU<MatrixXc> lu(liou);
    lu.setThreshold(1e-10);
    MatrixXc kernel = lu.kernel();
    REQUIRE(kernel.cols() == 1);
    MatrixXc rho_ref = Eigen::Map<MatrixXc>(kernel.col(0).data(), d, d);
    rho_ref /= rho_ref.trace();
    rho_ref = 0.5 * (rho_ref + rho_ref.adjoint().eval());
    CHECK((ss.rho - rho_ref).norm() < 1e-9);
}

TEST_CASE("g2 agrees with a direct Fock-index sum over the density matrix") {
    dissipative::TwoModeModel m = fig_model();
    auto ss = dissipative::steady_state(m);
    int d1 = m.n_max + 1;
    double num11 = 0.0, num12 = 0.0, pl = 0.0, pr = 0.0;
    for (int nl = 0; nl < d1; ++nl) {
        for (int nr = 0; nr < d1; ++nr) {
            double p = ss.rho(nl * d1 + nr, nl * d1 + nr).real();
            num11 += double(nl) * double(nl - 1) * p;
            num12 += double(nl) * double(nr) * p;
            pl += double(nl) * p;
            pr += double(nr) * p;
        }
    }
    CHECK(dissipative::g2(ss, 0, 0) == doctest::Approx(num11 / (pl * pl)).epsilon(1e-10));
    CHECK(dissipative::g2(ss, 0, 1) == doctest::Approx(num12 / (pl * pr)).epsilon(1e-10));
    CHECK(ss.n_l == doctest::Approx(pl).epsilon(1e-10));
}

TEST_CASE("mirror-symmetric pumping gives identical left and right observables") {
    dissipative::TwoModeModel m = fig_model();
    m.mirror_symmetric = true;
    auto ss = dissipative::steady_state(m);
    CHECK(ss.n_l == doctest::Approx(ss.n_r).epsilon(1e-10));
    auto c = dissipative::correlations(ss);
    CHECK(c.g11 == doctest::Approx(c.g22).epsilon(1e-8));
}

TEST_CASE("weak-drive populations scale with the pump squared") {
    dissipative::TwoModeModel m = fig_model();
    m.pump_amp = 2e-4;
    auto ss1 = dissipative::steady_state(m);
    m.pump_amp = 4e-4;
    auto ss2 = dissipative::steady_state(m);
    CHECK(ss2.n_l / ss1.n_l == doctest::Approx(4.0).epsilon(1e-3));
    CHECK(ss2.n_r / ss1.n_r == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("overdriven cutoff population triggers the truncation guard") {
    dissipative::TwoModeModel m = fig_model();
    m.n_max = 4;
    m.pump_amp = 0.5;
    CHECK_THROWS_AS(dissipative::steady_state(m), TruncationBreach);
}

TEST_CASE("parallel and serial detuning sweeps agree point by point") {
    dissipative::TwoModeModel m = fig_model();
    std::vector<double> deltas;
    for (int i = 0; i < 12; ++i) deltas.push_back(-0.1 + 0.02 * i);
    auto par = dissipative::detuning_sweep(m, deltas, false, true);
    auto ser = dissipative::detuning_sweep(m, deltas, false, false);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        REQUIRE(par[i].converged);
        REQUIRE(ser[i].converged);
        CHECK(par[i].g11 == doctest::Approx(ser[i].g11).epsilon(1e-12));
        CHECK(par[i].g12 == doctest::Approx(ser[i].g12).epsilon(1e-12));
        CHECK(par[i].n_l == doctest::Approx(ser[i].n_l).epsilon(1e-12));
    }
}

TEST_CASE("switching off the cross interaction changes the cross correlation") {
    dissipative::TwoModeModel m = fig_model();
    std::vector<double> deltas{-0.02, 0.0, 0.02};
    auto with = dissipative::detuning_sweep(m, deltas, false, false);
    auto without = dissipative::detuning_sweep(m, deltas, true, false);
    bool differs = false;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        REQUIRE(with[i].converged);
        REQUIRE(without[i].converged);
        if (std::abs(with[i].g12 - without[i].g12) > 1e-6) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("default detuning grid is symmetric and spans 3 max(U, J)") {
    dissipative::TwoModeModel m = fig_model();
    auto grid = dissipative::default_delta_grid(m, 161);
    REQUIRE(grid.size() == 161);
    CHECK(grid.front() == doctest::Approx(-3.0 * m.u11).epsilon(1e-14));
    CHECK(grid.back() == doctest::Approx(3.0 * m.u11).epsilon(1e-14));
    CHECK(grid[80] == doctest::Approx(0.0).epsilon(1e-14));
}
