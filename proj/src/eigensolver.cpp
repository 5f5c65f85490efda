#include "entherm/eigensolver.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace entherm {

namespace {

Eigen::VectorXd seeded_start_vector(std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = dist(rng);
    v.normalize();
    return v;
}

} // namespace

GroundStateResult lanczos_ground_state(const ApplyFn& apply_h,
                                       std::size_t dim,
                                       const LanczosOptions& opt) {
    if (dim < 1) throw std::invalid_argument("dim must be >= 1");
    if (opt.tol <= 0) throw std::invalid_argument("tol must be > 0");

    GroundStateResult res;
    if (dim == 1) {
        double in = 1.0, out = 0.0;
        apply_h(&in, &out);
        res.energy = out;
        res.vector = Eigen::VectorXd::Ones(1);
        res.residual_norm = 0.0;
        res.converged = true;
        return res;
    }

    const int max_k =
        static_cast<int>(std::min<std::size_t>(opt.max_iter, dim));
    Eigen::MatrixXd krylov(dim, std::min(max_k + 1, 64));
    krylov.col(0) = seeded_start_vector(dim, opt.seed);

    Eigen::VectorXd alpha(max_k), beta(max_k);
    Eigen::VectorXd w(dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;

    double best_residual = std::numeric_limits<double>::infinity();
    const int check_interval = 5;

    for (int k = 0; k < max_k; ++k) {
        if (k + 1 >= krylov.cols())
            krylov.conservativeResize(Eigen::NoChange,
                                      std::min(max_k + 1, k + 65));

        apply_h(krylov.col(k).data(), w.data());
        alpha[k] = krylov.col(k).dot(w);
        w -= alpha[k] * krylov.col(k);
        if (k > 0) w -= beta[k - 1] * krylov.col(k - 1);
        // Full reorthogonalization, two passes.
        for (int pass = 0; pass < 2; ++pass) {
            Eigen::VectorXd c = krylov.leftCols(k + 1).transpose() * w;
            w.noalias() -= krylov.leftCols(k + 1) * c;
        }
        beta[k] = w.norm();

        const double scale =
            alpha.head(k + 1).cwiseAbs().maxCoeff() +
            (k > 0 ? beta.head(k).cwiseAbs().maxCoeff() : 0.0);
        const bool exhausted = beta[k] <= 1e-14 * std::max(scale, 1.0);
        const bool last = (k + 1 == max_k) ||
                          (static_cast<std::size_t>(k + 1) == dim);

        if (exhausted || last || (k + 1) % check_interval == 0) {
            tri.computeFromTridiagonal(alpha.head(k + 1), beta.head(k));
            const double theta0 = tri.eigenvalues()[0];
            const double estimate =
                exhausted ? 0.0
                          : beta[k] * std::abs(tri.eigenvectors()(k, 0));
            best_residual = std::min(best_residual, estimate);
            if (estimate <= opt.tol || exhausted || last) {
                Eigen::VectorXd y =
                    krylov.leftCols(k + 1) * tri.eigenvectors().col(0);
                y.normalize();
                apply_h(y.data(), w.data());
                const double residual = (w - theta0 * y).norm();
                if (residual <= opt.tol || exhausted) {
                    res.energy = theta0;
                    res.vector = std::move(y);
                    res.residual_norm = residual;
                    res.gap_estimate =
                        k >= 1 ? tri.eigenvalues()[1] - theta0
                               : std::numeric_limits<double>::infinity();
                    res.iterations = k + 1;
                    res.converged = true;
                    return res;
                }
                best_residual = std::min(best_residual, residual);
                if (last) break;
            }
        }
        if (!exhausted) krylov.col(k + 1) = w / beta[k];
    }

    std::ostringstream msg;
    msg << "Lanczos did not converge after " << max_k
        << " iterations (best residual " << best_residual << ")";
    throw std::runtime_error(msg.str());
}

DenseSpectrum full_spectrum(const Eigen::MatrixXd& matrix) {
    if (matrix.rows() != matrix.cols())
        throw std::invalid_argument("matrix must be square");
    const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
    if (asym > 1e-12 * scale)
        throw std::invalid_argument("matrix not symmetric within 1e-12");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(matrix);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

} // namespace entherm
