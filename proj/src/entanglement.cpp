#include "entherm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace entherm {

namespace {

Eigen::MatrixXd amplitude_matrix(const StateVector& ground, int n_a) {
    if (!ground.basis) throw std::invalid_argument("state has no basis");
    const SectorBasis& basis = *ground.basis;
    const int n = basis.n_sites();
    if (n_a < 1 || n_a >= n)
        throw std::invalid_argument("n_a must split the system");
    const std::size_t dim_a = std::size_t{1} << n_a;
    const std::size_t dim_b = std::size_t{1} << (n - n_a);
    const std::uint64_t mask_a = (std::uint64_t{1} << n_a) - 1;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(dim_a, dim_b);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const std::uint64_t s = basis.state(k);
        c(s & mask_a, s >> n_a) = ground.amplitudes[k];
    }
    return c;
}

} // namespace

DensityMatrix reduced_density_matrix(const StateVector& ground, int n_a) {
    Eigen::MatrixXd c = amplitude_matrix(ground, n_a);
    DensityMatrix rho(c.rows(), c.rows());
    rho.noalias() = c * c.transpose();
    return rho;
}

DensityMatrix reduced_density_matrix_b(const StateVector& ground, int n_a) {
    Eigen::MatrixXd c = amplitude_matrix(ground, n_a);
    DensityMatrix rho(c.cols(), c.cols());
    rho.noalias() = c.transpose() * c;
    return rho;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho,
                                                      Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (double p : es.eigenvalues()) {
        if (p < -1e-8)
            throw std::invalid_argument(
                "density matrix has a significantly negative eigenvalue");
        if (p > kEntropyClampTol) s -= p * std::log(p);
    }
    return s;
}

double subsystem_energy(const DensityMatrix& rho, const Eigen::MatrixXd& h) {
    if (rho.rows() != h.rows() || rho.cols() != h.cols())
        throw std::invalid_argument("dimension mismatch");
    return rho.cwiseProduct(h).sum();
}

std::vector<double> entanglement_spectrum(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho,
                                                      Eigen::EigenvaluesOnly);
    std::vector<double> levels;
    std::size_t clamped = 0;
    for (double p : es.eigenvalues()) {
        if (p < -1e-8)
            throw std::invalid_argument(
                "density matrix has a significantly negative eigenvalue");
        if (p > kEntropyClampTol)
            levels.push_back(-std::log(p));
        else
            ++clamped;
    }
    std::sort(levels.begin(), levels.end());
    levels.insert(levels.end(), clamped,
                  std::numeric_limits<double>::infinity());
    return levels;
}

} // namespace entherm
