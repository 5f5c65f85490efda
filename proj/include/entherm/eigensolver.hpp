#pragma once

#include <cstdint>
#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace entherm {

struct LanczosOptions {
    double tol = 1e-10;       // residual norm ||H v - E v||
    int max_iter = 1000;
    std::uint64_t seed = 1;
};

struct GroundStateResult {
    double energy = 0.0;
    Eigen::VectorXd vector;
    double residual_norm = std::numeric_limits<double>::quiet_NaN();
    // E_1 - E_0 from the Ritz values; +inf for one-dimensional problems.
    double gap_estimate = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

using ApplyFn = std::function<void(const double*, double*)>;

// Lowest eigenpair by the Lanczos iteration with full reorthogonalization
// of the Krylov basis. Deterministic for a fixed seed. Throws on
// non-convergence after max_iter, with the best residual in the message.
GroundStateResult lanczos_ground_state(const ApplyFn& apply_h,
                                       std::size_t dim,
                                       const LanczosOptions& opt = {});

struct DenseSpectrum {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

// Complete spectrum of a dense real symmetric matrix.
DenseSpectrum full_spectrum(const Eigen::MatrixXd& matrix);

} // namespace entherm
