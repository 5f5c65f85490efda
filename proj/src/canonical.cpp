#include "entherm/canonical.hpp"

#include <cmath>
#include <stdexcept>

namespace entherm {

CanonicalPoint canonical_point(const Eigen::VectorXd& eigenvalues,
                               double beta) {
    if (beta < 0) throw std::invalid_argument("beta must be >= 0");
    if (eigenvalues.size() == 0) throw std::invalid_argument("empty spectrum");
    const double e0 = eigenvalues.minCoeff();
    double z = 0.0, ez = 0.0;
    for (double e : eigenvalues) {
        const double w = std::exp(-beta * (e - e0));
        z += w;
        ez += e * w;
    }
    CanonicalPoint p;
    p.beta = beta;
    p.log_z = std::log(z) - beta * e0;
    p.energy = ez / z;
    p.entropy = beta * p.energy + p.log_z;
    return p;
}

CanonicalCurve canonical_curve(const DenseSpectrum& spectrum,
                               const std::vector<double>& betas) {
    CanonicalCurve curve;
    curve.betas = betas;
    curve.entropies.reserve(betas.size());
    curve.energies.reserve(betas.size());
    curve.log_z.reserve(betas.size());
    for (double beta : betas) {
        CanonicalPoint p = canonical_point(spectrum.eigenvalues, beta);
        curve.entropies.push_back(p.entropy);
        curve.energies.push_back(p.energy);
        curve.log_z.push_back(p.log_z);
    }
    return curve;
}

GibbsState gibbs_state(const DenseSpectrum& spectrum, double beta) {
    if (beta < 0) throw std::invalid_argument("beta must be >= 0");
    const double e0 = spectrum.eigenvalues.minCoeff();
    Eigen::VectorXd w(spectrum.eigenvalues.size());
    for (Eigen::Index n = 0; n < w.size(); ++n)
        w[n] = std::exp(-beta * (spectrum.eigenvalues[n] - e0));
    w /= w.sum();
    GibbsState g;
    g.beta = beta;
    g.rho.noalias() = spectrum.eigenvectors * w.asDiagonal() *
                      spectrum.eigenvectors.transpose();
    return g;
}

std::vector<double> default_beta_grid(double j, double t_min, double t_max,
                                      int points) {
    if (t_min <= 0 || t_max <= t_min || points < 2)
        throw std::invalid_argument("invalid temperature grid");
    std::vector<double> betas;
    betas.reserve(points);
    const double ratio = std::log(t_max / t_min);
    for (int k = 0; k < points; ++k) {
        const double t = t_min * std::exp(ratio * k / (points - 1));
        betas.push_back(1.0 / (t * j));
    }
    return betas;
}

} // namespace entherm
