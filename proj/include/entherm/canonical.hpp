#pragma once

#include <vector>

#include "entherm/eigensolver.hpp"
#include "entherm/entanglement.hpp"

namespace entherm {

struct CanonicalCurve {
    std::vector<double> betas;
    std::vector<double> entropies;  // nats
    std::vector<double> energies;
    std::vector<double> log_z;
};

struct CanonicalPoint {
    double beta = 0.0;
    double log_z = 0.0;
    double energy = 0.0;
    double entropy = 0.0;
};

// Thermodynamics from a complete spectrum. Exponents are shifted by the
// ground energy, so beta * spectral range up to 1e6 stays finite.
CanonicalPoint canonical_point(const Eigen::VectorXd& eigenvalues, double beta);

CanonicalCurve canonical_curve(const DenseSpectrum& spectrum,
                               const std::vector<double>& betas);

struct GibbsState {
    double beta = 0.0;
    DensityMatrix rho;
};

// rho = V diag(w) V^T with Boltzmann weights from the shifted exponents.
GibbsState gibbs_state(const DenseSpectrum& spectrum, double beta);

// Geometric grid of temperatures T/J in [t_min, t_max], returned as betas
// in descending order (ascending T). Default range covers 0.01..100 with
// 400 points.
std::vector<double> default_beta_grid(double j = 1.0, double t_min = 0.01,
                                      double t_max = 100.0, int points = 400);

} // namespace entherm
