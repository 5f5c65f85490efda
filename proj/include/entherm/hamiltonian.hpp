#pragma once

#include <vector>

#include <Eigen/Dense>

#include "entherm/basis.hpp"
#include "entherm/lattice.hpp"

namespace entherm {

struct WeightedBond {
    int i = 0;
    int j = 0;
    double coupling = 0.0;
};

// S_i . S_j exchange terms: per bond a diagonal J Sz_i Sz_j piece plus the
// (J/2)(S+_i S-_j + h.c.) flip piece. Hermitian, conserves total Sz.
class HeisenbergOperator {
public:
    HeisenbergOperator(std::vector<WeightedBond> bonds, int n_sites);

    int n_sites() const { return n_sites_; }
    const std::vector<WeightedBond>& bonds() const { return bonds_; }

    // out = H * in over the given sector basis. Gather form: each output
    // entry is assembled independently, so rows may run in parallel.
    void apply(const SectorBasis& basis, const double* in, double* out) const;
    Eigen::VectorXd apply(const SectorBasis& basis,
                          const Eigen::VectorXd& in) const;
    StateVector apply(const StateVector& v) const;

    // Dense matrix over the full 2^n_sites product basis (all Sz sectors).
    // Guarded at n_sites <= 14.
    Eigen::MatrixXd build_dense() const;

private:
    std::vector<WeightedBond> bonds_;
    int n_sites_;
};

// Convenience builders.
std::vector<WeightedBond> weighted_bonds(const BondList& bonds, double coupling);
std::vector<WeightedBond> coupled_model_bonds(const CoupledModel& model);

} // namespace entherm
