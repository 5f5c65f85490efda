#include <doctest.h>

#include <bit>
#include <cmath>
#include <memory>
#include <random>

#include "entherm/basis.hpp"
#include "entherm/eigensolver.hpp"
#include "entherm/hamiltonian.hpp"

using namespace entherm;

TEST_CASE("sector sizes follow the binomial count") {
    CHECK(SectorBasis(2, 1).size() == 2);
    CHECK(SectorBasis(4, 2).size() == 6);
    CHECK(binomial(24, 12) == 2704156);
    CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("basis index round-trip") {
    SectorBasis basis(8, 4);
    for (std::size_t k = 0; k < basis.size(); ++k)
        CHECK(basis.index_of(basis.state(k)) == k);
}

TEST_CASE("single bond acts as the textbook exchange") {
    HeisenbergOperator h({{0, 1, 1.0}}, 2);
    SectorBasis basis(2, 1);
    // states ascending: 0b01 = up at site 0, 0b10 = up at site 1
    REQUIRE(basis.state(0) == 1);

    Eigen::VectorXd in(2), out(2);
    in << 1.0, 0.0;
    out = h.apply(basis, in);
    CHECK(out[0] == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(out[1] == doctest::Approx(0.5).epsilon(1e-15));

    // singlet is the -3/4 eigenstate
    in << 1.0, -1.0;
    in /= std::sqrt(2.0);
    out = h.apply(basis, in);
    CHECK((out + 0.75 * in).norm() < 1e-14);
}

TEST_CASE("four-site ring ground energy") {
    std::vector<WeightedBond> bonds{
        {0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}};
    HeisenbergOperator h(bonds, 4);
    SectorBasis basis(4, 2);
    auto apply = [&](const double* in, double* out) {
        h.apply(basis, in, out);
    };
    GroundStateResult gs = lanczos_ground_state(apply, basis.size());
    CHECK(gs.energy == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("sector blocks agree with the dense matrix") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coup(0.2, 1.5);
    for (int n : {4, 6, 8}) {
        CAPTURE(n);
        std::vector<WeightedBond> bonds;
        for (int i = 0; i < n; ++i)
            bonds.push_back({i, (i + 1) % n, coup(rng)});
        HeisenbergOperator h(bonds, n);
        const Eigen::MatrixXd dense = h.build_dense();

        CHECK((dense - dense.transpose()).norm() < 1e-13);

        SectorBasis basis(n, n / 2);
        Eigen::VectorXd in = Eigen::VectorXd::Random(basis.size());
        const Eigen::VectorXd out = h.apply(basis, in);

        // scatter, act densely, gather
        Eigen::VectorXd full = Eigen::VectorXd::Zero(dense.rows());
        for (std::size_t k = 0; k < basis.size(); ++k)
            full[basis.state(k)] = in[k];
        const Eigen::VectorXd full_out = dense * full;
        for (std::size_t k = 0; k < basis.size(); ++k)
            CHECK(full_out[basis.state(k)] ==
                  doctest::Approx(out[k]).epsilon(1e-12));
        // dense action stays inside the sector
        double leak = 0.0;
        for (Eigen::Index s = 0; s < full_out.size(); ++s)
            if (std::popcount(std::uint64_t(s)) != n / 2)
                leak += std::abs(full_out[s]);
        CHECK(leak == 0.0);
    }
}

TEST_CASE("operator is linear and symmetric on the sector") {
    const BondList cluster = build_cluster({ClusterKind::chain, 6});
    HeisenbergOperator h(weighted_bonds(cluster, 0.7), 6);
    SectorBasis basis(6, 3);
    Eigen::VectorXd x = Eigen::VectorXd::Random(basis.size());
    Eigen::VectorXd y = Eigen::VectorXd::Random(basis.size());

    const Eigen::VectorXd hx = h.apply(basis, x);
    const Eigen::VectorXd hy = h.apply(basis, y);
    const Eigen::VectorXd hxy = h.apply(basis, (2.0 * x + 3.0 * y).eval());
    CHECK((hxy - 2.0 * hx - 3.0 * hy).norm() < 1e-12);
    CHECK(x.dot(hy) == doctest::Approx(y.dot(hx)).epsilon(1e-12));
}

TEST_CASE("coupled model bonds carry the three couplings") {
    const BondList cluster = build_cluster({ClusterKind::chain, 4});
    const CoupledModel m = build_coupled_model(cluster, 1.0, 0.5, 0.25);
    const auto bonds = coupled_model_bonds(m);
    REQUIRE(bonds.size() == 12);
    double ja = 0, jb = 0, rung = 0;
    for (const auto& b : bonds) {
        if (b.j < 4) ja += b.coupling;
        else if (b.i >= 4) jb += b.coupling;
        else rung += b.coupling;
    }
    CHECK(ja == doctest::Approx(4.0));
    CHECK(jb == doctest::Approx(2.0));
    CHECK(rung == doctest::Approx(1.0));
}

TEST_CASE("guards") {
    CHECK_THROWS(HeisenbergOperator({{0, 0, 1.0}}, 2));
    CHECK_THROWS(HeisenbergOperator({{0, 5, 1.0}}, 4));
    CHECK_THROWS(SectorBasis(4, 5));
    CHECK_THROWS(SectorBasis(40, 20));  // memory budget
}
