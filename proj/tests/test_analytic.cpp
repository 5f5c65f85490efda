#include <doctest.h>

#include <cmath>

#include "entherm/analytic.hpp"
#include "entherm/thermo.hpp"

using namespace entherm;

TEST_CASE("boson decoupled limit") {
    const BosonModel m = boson_from_theta(0.0, 1.0, 1.0);
    const BosonObservables o = boson_observables(m);
    CHECK(m.lambda == doctest::Approx(0.0));
    CHECK(o.s_a == doctest::Approx(0.0));
    CHECK(o.e_a == doctest::Approx(0.5));
    CHECK(std::isinf(o.beta_star));
    CHECK(o.n_be == doctest::Approx(0.0));
}

TEST_CASE("boson point with unit effective beta") {
    // tanh^2 theta = e^{-1} makes beta_star = 1 for omega_a = 1
    const double theta = std::atanh(std::exp(-0.5));
    const BosonModel m = boson_from_theta(theta, 1.0, 1.0);
    const BosonObservables o = boson_observables(m);
    CHECK(o.beta_star == doctest::Approx(1.0).epsilon(1e-13));
    const double n = 1.0 / (std::exp(1.0) - 1.0);
    CHECK(o.n_be == doctest::Approx(n).epsilon(1e-13));
    CHECK(o.e_a == doctest::Approx(n + 0.5).epsilon(1e-13));
    const double s = (n + 1) * std::log(n + 1) - n * std::log(n);
    CHECK(o.s_a == doctest::Approx(s).epsilon(1e-13));
    CHECK(o.s_a == doctest::Approx(1.0406).epsilon(1e-4));
}

TEST_CASE("boson reduced state equals the canonical state") {
    for (double lambda : {0.1, 0.5, 0.9}) {
        CAPTURE(lambda);
        const BosonModel m = boson_from_lambda(lambda, 1.0, 1.0);
        const auto [red, can] = boson_density_matrices(m);
        CHECK(std::abs(red.trace() - 1.0) < 1e-13);
        CHECK((red - can).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(fidelity(red, can) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("boson stability window") {
    // asymmetric modes: tanh^2 theta must stay below omega_b / omega_a
    const double edge = std::atanh(std::sqrt(0.5 / 1.0));
    CHECK_NOTHROW(boson_from_theta(0.99 * edge, 1.0, 0.5));
    CHECK_THROWS(boson_from_theta(1.01 * edge, 1.0, 0.5));
    CHECK_THROWS(boson_from_lambda(0.76, 1.0, 0.5));  // >= omega = 0.75
}

TEST_CASE("boson effective beta matches dS/dE") {
    const double lambda = 0.4;
    const BosonObservables o =
        boson_observables(boson_from_lambda(lambda, 1.0, 1.0));
    const double dl = 1e-4;
    const BosonObservables hi =
        boson_observables(boson_from_lambda(lambda + dl, 1.0, 1.0));
    const BosonObservables lo =
        boson_observables(boson_from_lambda(lambda - dl, 1.0, 1.0));
    const double fd = (hi.s_a - lo.s_a) / (hi.e_a - lo.e_a);
    CHECK(fd == doctest::Approx(o.beta_star).epsilon(1e-6));
}

TEST_CASE("fermion decoupled limit and maximal mixing") {
    const FermionObservables o0 =
        fermion_observables(fermion_from_theta(0.0, 1.0, 1.0));
    CHECK(o0.s_a == doctest::Approx(0.0));
    CHECK(o0.e_a == doctest::Approx(-0.5));
    CHECK(std::isinf(o0.beta_star));

    const double quarter_pi = std::atan(1.0);
    const FermionObservables o1 =
        fermion_observables(fermion_from_theta(quarter_pi, 1.0, 1.0));
    CHECK(o1.s_a == doctest::Approx(std::log(2.0)).epsilon(1e-13));
    CHECK(o1.e_a == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(o1.beta_star == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("fermion reduced state equals the canonical state") {
    for (double lambda : {0.2, 1.0, 5.0}) {
        CAPTURE(lambda);
        const FermionModel m = fermion_from_lambda(lambda, 1.0, 1.0);
        const auto [red, can] = fermion_density_matrices(m);
        CHECK(std::abs(red.trace() - 1.0) < 1e-14);
        CHECK((red - can).cwiseAbs().maxCoeff() == 0.0);

        const FermionObservables o = fermion_observables(m);
        CHECK(red(1, 1) == doctest::Approx(o.f_fd).epsilon(1e-13));
    }
}

TEST_CASE("fermion effective beta matches dS/dE") {
    const double lambda = 0.7;
    const FermionObservables o =
        fermion_observables(fermion_from_lambda(lambda, 1.0, 1.0));
    const double dl = 1e-4;
    const FermionObservables hi =
        fermion_observables(fermion_from_lambda(lambda + dl, 1.0, 1.0));
    const FermionObservables lo =
        fermion_observables(fermion_from_lambda(lambda - dl, 1.0, 1.0));
    const double fd = (hi.s_a - lo.s_a) / (hi.e_a - lo.e_a);
    CHECK(fd == doctest::Approx(o.beta_star).epsilon(1e-6));
}

TEST_CASE("fermion stability window for asymmetric modes") {
    const double edge = std::atan(std::sqrt(0.5 / 1.0));
    CHECK_NOTHROW(fermion_from_theta(0.99 * edge, 1.0, 0.5));
    CHECK_THROWS(fermion_from_theta(1.05 * edge, 1.0, 0.5));
}

TEST_CASE("branch symmetry in theta") {
    const BosonObservables p = boson_observables(boson_from_theta(0.3, 1, 1));
    const BosonObservables n = boson_observables(boson_from_theta(-0.3, 1, 1));
    CHECK(p.s_a == doctest::Approx(n.s_a).epsilon(1e-14));
    CHECK(p.e_a == doctest::Approx(n.e_a).epsilon(1e-14));
    CHECK(boson_from_theta(0.3, 1, 1).lambda ==
          doctest::Approx(-boson_from_theta(-0.3, 1, 1).lambda));
}

TEST_CASE("insufficient explicit cutoff is rejected") {
    const BosonModel m = boson_from_lambda(0.9, 1.0, 1.0);
    CHECK_THROWS(boson_density_matrices(m, 2));
}
