#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "entherm/analytic.hpp"
#include "entherm/thermo.hpp"

using namespace entherm;

TEST_CASE("uniform grid construction") {
    const auto grid = uniform_lambda_grid(0.0, 0.1, 0.02);
    REQUIRE(grid.size() == 6);
    CHECK(grid[0] == doctest::Approx(0.0));
    CHECK(grid[5] == doctest::Approx(0.1));
    CHECK_THROWS(uniform_lambda_grid(0.0, 1.0, 0.0));
}

TEST_CASE("central difference converges to the closed-form beta") {
    // oracle: S_A(lambda), E_A(lambda) of the paired boson modes, whose
    // dS/dE is known in closed form
    const double omega = 1.0;
    const double lambda_c = 0.5;
    const double beta_exact =
        boson_observables(boson_from_lambda(lambda_c, omega, omega)).beta_star;

    double prev_err = 0.0;
    for (int halving = 0; halving < 4; ++halving) {
        const double dl = 0.02 / (1 << halving);
        std::vector<double> ls{lambda_c - dl, lambda_c, lambda_c + dl};
        std::vector<double> s, e;
        for (double l : ls) {
            const BosonObservables o =
                boson_observables(boson_from_lambda(l, omega, omega));
            s.push_back(o.s_a);
            e.push_back(o.e_a);
        }
        const auto beta = effective_beta(ls, s, e, dl);
        REQUIRE(std::isnan(beta[0]));
        REQUIRE(std::isnan(beta[2]));
        const double err = std::abs(beta[1] - beta_exact);
        if (halving > 0) {
            // quadratic convergence: each halving cuts the error ~4x
            CHECK(err < 0.3 * prev_err);
        }
        prev_err = err;
    }
    CHECK(prev_err < 1e-4);
}

TEST_CASE("non-uniform spacing yields NaN") {
    std::vector<double> ls{0.0, 0.02, 0.05};
    std::vector<double> s{0.0, 0.1, 0.2}, e{0.0, 0.1, 0.2};
    const auto beta = effective_beta(ls, s, e, 0.02);
    CHECK(std::isnan(beta[1]));
}

TEST_CASE("relative entropy basics") {
    DensityMatrix half = DensityMatrix::Identity(2, 2) * 0.5;
    DensityMatrix pure(2, 2);
    pure << 1.0, 0.0, 0.0, 0.0;

    CHECK(relative_entropy(half, half) == doctest::Approx(0.0));
    CHECK(relative_entropy(pure, half) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    // support mismatch diverges; the reverse direction stays finite
    CHECK(std::isinf(relative_entropy(half, pure)));

    DensityMatrix q(2, 2);
    q << 0.7, 0.0, 0.0, 0.3;
    CHECK(relative_entropy(pure, q) !=
          doctest::Approx(relative_entropy(q, pure)));
    CHECK(relative_entropy(q, half) >= 0.0);
    CHECK(relative_entropy(half, q) >= 0.0);
}

TEST_CASE("closed Gibbs form agrees with the matrix form") {
    Eigen::VectorXd eig(2);
    eig << -1.0, 1.0;
    DenseSpectrum spec;
    spec.eigenvalues = eig;
    spec.eigenvectors = Eigen::MatrixXd::Identity(2, 2);
    const double beta = 0.8;
    const GibbsState g = gibbs_state(spec, beta);
    const CanonicalPoint p = canonical_point(eig, beta);

    DensityMatrix rho(2, 2);
    rho << 0.6, 0.1, 0.1, 0.4;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho,
                                                      Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (double w : es.eigenvalues()) s -= w * std::log(w);
    Eigen::MatrixXd h = eig.asDiagonal();
    const double e = (rho * h).trace();
    CHECK(relative_entropy_vs_gibbs(s, e, beta, p.log_z) ==
          doctest::Approx(relative_entropy(rho, g.rho)).epsilon(1e-10));
}

TEST_CASE("fidelity basics") {
    DensityMatrix half = DensityMatrix::Identity(2, 2) * 0.5;
    DensityMatrix pure(2, 2);
    pure << 1.0, 0.0, 0.0, 0.0;
    CHECK(fidelity(half, pure) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(half, half) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(pure, pure) == doctest::Approx(1.0).epsilon(1e-12));
    // symmetric in its arguments
    DensityMatrix q(2, 2);
    q << 0.7, 0.1, 0.1, 0.3;
    CHECK(fidelity(q, half) == doctest::Approx(fidelity(half, q)).epsilon(1e-12));
}

TEST_CASE("spin correlations on simple diagonal states") {
    // |up up> on two sites: C_01 = +1/4
    DensityMatrix up(4, 4);
    up.setZero();
    up(3, 3) = 1.0;
    CHECK(spin_correlation(up, 0, 1) == doctest::Approx(0.25));
    // maximally mixed: zero
    DensityMatrix mixed = DensityMatrix::Identity(4, 4) * 0.25;
    CHECK(spin_correlation(mixed, 0, 1) == doctest::Approx(0.0));
    CHECK_THROWS(spin_correlation(mixed, 0, 0));
    CHECK_THROWS(spin_correlation(mixed, 0, 5));
}

TEST_CASE("Schmidt weights match Boltzmann weights for the paired modes") {
    const BosonModel m = boson_from_lambda(0.6, 1.0, 1.0);
    const auto [red, can] = boson_density_matrices(m);
    const BosonObservables o = boson_observables(m);

    Eigen::VectorXd schmidt = red.diagonal();
    std::sort(schmidt.data(), schmidt.data() + schmidt.size(),
              std::greater<double>());
    Eigen::VectorXd eps(red.rows());
    for (Eigen::Index n = 0; n < eps.size(); ++n)
        eps[n] = m.omega_a * (n + 0.5);

    const SchmidtDiagnostic diag =
        schmidt_boltzmann_diagnostic(schmidt, eps, o.beta_star);
    CHECK(diag.tv_distance < 1e-13);
    CHECK_FALSE(diag.degenerate_levels);
}
