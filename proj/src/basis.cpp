#include "entherm/basis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace entherm {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

SectorBasis::SectorBasis(int n_sites, int n_up)
    : n_sites_(n_sites), n_up_(n_up) {
    if (n_sites < 0 || n_sites > 32 || n_up < 0 || n_up > n_sites)
        throw std::invalid_argument("invalid sector (need 0 <= n_up <= n_sites <= 32)");
    std::uint64_t count = binomial(n_sites, n_up);
    if (count > (std::uint64_t{1} << 28))
        throw std::length_error("sector dimension exceeds memory budget");
    states_.reserve(count);
    if (n_up == 0) {
        states_.push_back(0);
        return;
    }
    std::uint64_t v = (std::uint64_t{1} << n_up) - 1;
    std::uint64_t limit = std::uint64_t{1} << n_sites;
    while (v < limit) {
        states_.push_back(v);
        // Gosper's hack: next configuration with the same popcount.
        std::uint64_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
}

std::size_t SectorBasis::index_of(std::uint64_t config) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), config);
    if (it == states_.end() || *it != config)
        throw std::out_of_range("configuration not in sector");
    return static_cast<std::size_t>(it - states_.begin());
}

} // namespace entherm
