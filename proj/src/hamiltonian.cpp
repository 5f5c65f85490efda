#include "entherm/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>

#include "entherm/parallel.hpp"

namespace entherm {

HeisenbergOperator::HeisenbergOperator(std::vector<WeightedBond> bonds,
                                       int n_sites)
    : bonds_(std::move(bonds)), n_sites_(n_sites) {
    if (n_sites_ < 1 || n_sites_ > 32)
        throw std::invalid_argument("n_sites out of range");
    for (const auto& b : bonds_)
        if (b.i < 0 || b.j < 0 || b.i >= n_sites_ || b.j >= n_sites_ ||
            b.i == b.j)
            throw std::invalid_argument("bond site out of range");
}

void HeisenbergOperator::apply(const SectorBasis& basis, const double* in,
                               double* out) const {
    const auto& states = basis.states();
    const std::size_t dim = states.size();
    const auto* first = states.data();
    const auto* last = first + dim;

    auto row = [&](std::size_t k) {
        const std::uint64_t s = states[k];
        double acc = 0.0;
        for (const auto& b : bonds_) {
            const std::uint64_t mask =
                (std::uint64_t{1} << b.i) | (std::uint64_t{1} << b.j);
            const std::uint64_t bits = s & mask;
            if (bits == 0 || bits == mask) {
                acc += 0.25 * b.coupling * in[k];
            } else {
                acc -= 0.25 * b.coupling * in[k];
                const std::uint64_t flipped = s ^ mask;
                const auto* it = std::lower_bound(first, last, flipped);
                acc += 0.5 * b.coupling * in[it - first];
            }
        }
        out[k] = acc;
    };
    parallel_for(dim, row);
}

Eigen::VectorXd HeisenbergOperator::apply(const SectorBasis& basis,
                                          const Eigen::VectorXd& in) const {
    if (static_cast<std::size_t>(in.size()) != basis.size())
        throw std::invalid_argument("vector/basis dimension mismatch");
    Eigen::VectorXd out(in.size());
    apply(basis, in.data(), out.data());
    return out;
}

StateVector HeisenbergOperator::apply(const StateVector& v) const {
    return {v.basis, apply(*v.basis, v.amplitudes)};
}

Eigen::MatrixXd HeisenbergOperator::build_dense() const {
    if (n_sites_ > 14)
        throw std::length_error("dense build limited to n_sites <= 14");
    const std::size_t dim = std::size_t{1} << n_sites_;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (std::uint64_t s = 0; s < dim; ++s) {
        for (const auto& b : bonds_) {
            const std::uint64_t mask =
                (std::uint64_t{1} << b.i) | (std::uint64_t{1} << b.j);
            const std::uint64_t bits = s & mask;
            if (bits == 0 || bits == mask) {
                m(s, s) += 0.25 * b.coupling;
            } else {
                m(s, s) -= 0.25 * b.coupling;
                m(s ^ mask, s) += 0.5 * b.coupling;
            }
        }
    }
    return m;
}

std::vector<WeightedBond> weighted_bonds(const BondList& bonds,
                                         double coupling) {
    std::vector<WeightedBond> out;
    out.reserve(bonds.bonds.size());
    for (const auto& b : bonds.bonds) out.push_back({b.i, b.j, coupling});
    return out;
}

std::vector<WeightedBond> coupled_model_bonds(const CoupledModel& model) {
    std::vector<WeightedBond> out;
    for (const auto& b : model.bonds_a.bonds)
        out.push_back({b.i, b.j, model.j_a});
    for (const auto& b : model.bonds_b.bonds)
        out.push_back({b.i, b.j, model.j_b});
    for (const auto& b : model.rung_bonds)
        out.push_back({b.i, b.j, model.lambda});
    return out;
}

} // namespace entherm
