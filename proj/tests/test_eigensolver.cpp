#include <doctest.h>

#include <cmath>

#include "entherm/eigensolver.hpp"
#include "entherm/hamiltonian.hpp"

using namespace entherm;

namespace {

ApplyFn dense_apply(const Eigen::MatrixXd& m) {
    return [m](const double* in, double* out) {
        Eigen::Map<const Eigen::VectorXd> x(in, m.cols());
        Eigen::Map<Eigen::VectorXd> y(out, m.rows());
        y.noalias() = m * x;
    };
}

} // namespace

TEST_CASE("one-dimensional problem") {
    Eigen::MatrixXd m(1, 1);
    m << 3.5;
    GroundStateResult gs = lanczos_ground_state(dense_apply(m), 1);
    CHECK(gs.energy == doctest::Approx(3.5));
    CHECK(gs.converged);
    CHECK(std::isinf(gs.gap_estimate));
}

TEST_CASE("two-site exchange pair") {
    HeisenbergOperator h({{0, 1, 1.0}}, 2);
    SectorBasis basis(2, 1);
    auto apply = [&](const double* in, double* out) {
        h.apply(basis, in, out);
    };
    GroundStateResult gs = lanczos_ground_state(apply, 2);
    CHECK(gs.energy == doctest::Approx(-0.75).epsilon(1e-13));
    CHECK(gs.gap_estimate == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("coupled ladder ground state matches dense diagonalization") {
    const BondList cluster = build_cluster({ClusterKind::chain, 4});
    const CoupledModel model = build_coupled_model(cluster, 1.0, 1.0, 0.8);
    HeisenbergOperator h(coupled_model_bonds(model), 8);

    SectorBasis basis(8, 4);
    REQUIRE(basis.size() == 70);

    // dense oracle on the same sector block
    Eigen::MatrixXd block(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(basis.size());
        e[col] = 1.0;
        block.col(col) = h.apply(basis, e);
    }
    const DenseSpectrum spectrum = full_spectrum(block);

    auto apply = [&](const double* in, double* out) {
        h.apply(basis, in, out);
    };
    GroundStateResult gs = lanczos_ground_state(apply, basis.size());
    CHECK(gs.converged);
    CHECK(gs.residual_norm < 1e-10);
    CHECK(std::abs(gs.energy - spectrum.eigenvalues[0]) < 1e-10);
    // eigenvector up to sign
    const Eigen::VectorXd v0 = spectrum.eigenvectors.col(0);
    CHECK(std::abs(std::abs(v0.dot(gs.vector)) - 1.0) < 1e-9);
}

TEST_CASE("Rayleigh quotient of the result is variational") {
    const BondList cluster = build_cluster({ClusterKind::chain, 6});
    HeisenbergOperator h(weighted_bonds(cluster, 1.0), 6);
    SectorBasis basis(6, 3);
    auto apply = [&](const double* in, double* out) {
        h.apply(basis, in, out);
    };
    GroundStateResult gs = lanczos_ground_state(apply, basis.size());
    Eigen::VectorXd trial = Eigen::VectorXd::Random(basis.size()).normalized();
    const double rq = trial.dot(h.apply(basis, trial));
    CHECK(gs.energy <= rq + 1e-12);
}

TEST_CASE("result independent of the start seed") {
    const BondList cluster = build_cluster({ClusterKind::chain, 6});
    HeisenbergOperator h(weighted_bonds(cluster, 1.0), 6);
    SectorBasis basis(6, 3);
    auto apply = [&](const double* in, double* out) {
        h.apply(basis, in, out);
    };
    LanczosOptions a, b;
    a.seed = 1;
    b.seed = 99;
    const double ea = lanczos_ground_state(apply, basis.size(), a).energy;
    const double eb = lanczos_ground_state(apply, basis.size(), b).energy;
    CHECK(ea == doctest::Approx(eb).epsilon(1e-12));
}

TEST_CASE("full_spectrum rejects asymmetric input") {
    Eigen::MatrixXd m(2, 2);
    m << 0.0, 1.0, 0.5, 0.0;
    CHECK_THROWS(full_spectrum(m));
}
