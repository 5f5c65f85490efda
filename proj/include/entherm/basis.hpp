#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <Eigen/Dense>

namespace entherm {

// All spin configurations of n_sites spin-1/2 sites with exactly n_up bits
// set (bit s = spin up at site s), sorted ascending.
class SectorBasis {
public:
    SectorBasis(int n_sites, int n_up);

    int n_sites() const { return n_sites_; }
    int n_up() const { return n_up_; }
    std::size_t size() const { return states_.size(); }
    std::uint64_t state(std::size_t k) const { return states_[k]; }

    // Ordinal of a configuration, by binary search. The configuration must
    // be a member of the sector.
    std::size_t index_of(std::uint64_t config) const;

    const std::vector<std::uint64_t>& states() const { return states_; }

private:
    int n_sites_;
    int n_up_;
    std::vector<std::uint64_t> states_;
};

std::uint64_t binomial(int n, int k);

struct StateVector {
    std::shared_ptr<const SectorBasis> basis;
    Eigen::VectorXd amplitudes;

    double norm() const { return amplitudes.norm(); }
};

} // namespace entherm
