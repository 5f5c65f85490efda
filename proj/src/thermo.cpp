#include "entherm/thermo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entherm/hamiltonian.hpp"
#include "entherm/parallel.hpp"

namespace entherm {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sz_bit(std::uint64_t state, int site) {
    return (state >> site) & 1 ? 0.5 : -0.5;
}

} // namespace

std::vector<double> uniform_lambda_grid(double lambda_min, double lambda_max,
                                        double dlambda) {
    if (dlambda <= 0) throw std::invalid_argument("dlambda must be > 0");
    std::vector<double> grid;
    const long n = std::lround((lambda_max - lambda_min) / dlambda);
    for (long k = 0; k <= n; ++k) grid.push_back(lambda_min + k * dlambda);
    return grid;
}

std::vector<SweepPoint> lambda_sweep(const BondList& cluster, double j_a,
                                     double j_b,
                                     const std::vector<double>& lambdas,
                                     const SweepOptions& opt) {
    const int n_a = cluster.n_sites;
    auto basis = std::make_shared<const SectorBasis>(2 * n_a, n_a);

    // H_A and H_B over each layer's local 2^{N_A} space share the cluster
    // structure and differ only in the coupling.
    HeisenbergOperator h_unit(weighted_bonds(cluster, 1.0), n_a);
    const Eigen::MatrixXd unit_dense = h_unit.build_dense();
    const Eigen::MatrixXd h_a_dense = j_a * unit_dense;
    const Eigen::MatrixXd h_b_dense = j_b * unit_dense;

    std::vector<SweepPoint> points(lambdas.size());
    const double degeneracy_tol = opt.degeneracy_tol_factor * j_a;

    parallel_for(lambdas.size(), [&](std::size_t idx) {
        SweepPoint& pt = points[idx];
        pt.lambda = lambdas[idx];
        try {
            CoupledModel model =
                build_coupled_model(cluster, j_a, j_b, pt.lambda);
            HeisenbergOperator h(coupled_model_bonds(model), 2 * n_a);

            LanczosOptions lopt;
            lopt.tol = opt.tol;
            lopt.max_iter = opt.max_iter;
            lopt.seed = opt.seed + 1000003 * idx;
            auto apply = [&](const double* in, double* out) {
                h.apply(*basis, in, out);
            };
            GroundStateResult gs =
                lanczos_ground_state(apply, basis->size(), lopt);

            pt.ground_energy = gs.energy;
            pt.gap_estimate = gs.gap_estimate;
            pt.degenerate = gs.gap_estimate < degeneracy_tol;

            StateVector psi{basis, std::move(gs.vector)};
            DensityMatrix rho = reduced_density_matrix(psi, n_a);
            DensityMatrix rho_b = reduced_density_matrix_b(psi, n_a);

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
                rho, Eigen::EigenvaluesOnly);
            Eigen::VectorXd p = es.eigenvalues().reverse();
            double s = 0.0;
            for (double w : p)
                if (w > kEntropyClampTol) s -= w * std::log(w);
            pt.s_a = s;
            pt.schmidt = std::move(p);
            pt.e_a = subsystem_energy(rho, h_a_dense);
            pt.e_b = subsystem_energy(rho_b, h_b_dense);
            if (opt.keep_rho) pt.rho = std::move(rho);
        } catch (const std::exception& ex) {
            pt.failed = true;
            pt.error = ex.what();
        }
    });
    return points;
}

std::vector<double> effective_beta(const std::vector<double>& lambdas,
                                   const std::vector<double>& entropies,
                                   const std::vector<double>& energies,
                                   double delta_lambda) {
    const std::size_t n = lambdas.size();
    if (entropies.size() != n || energies.size() != n)
        throw std::invalid_argument("sweep arrays must have equal length");
    if (delta_lambda <= 0)
        throw std::invalid_argument("delta_lambda must be > 0");
    std::vector<double> beta(n, kNaN);
    if (n < 3) return beta;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const bool uniform =
            std::abs(lambdas[i] - lambdas[i - 1] - delta_lambda) <
                1e-9 * std::max(1.0, delta_lambda) &&
            std::abs(lambdas[i + 1] - lambdas[i] - delta_lambda) <
                1e-9 * std::max(1.0, delta_lambda);
        if (!uniform) continue;
        const double de = energies[i + 1] - energies[i - 1];
        if (std::abs(de) < 1e-12) continue;
        beta[i] = (entropies[i + 1] - entropies[i - 1]) / de;
    }
    return beta;
}

double relative_entropy(const DensityMatrix& rho1, const DensityMatrix& rho0) {
    if (rho1.rows() != rho0.rows())
        throw std::invalid_argument("dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es1(rho1,
                                                       Eigen::EigenvaluesOnly);
    double term1 = 0.0;
    for (double p : es1.eigenvalues())
        if (p > kEntropyClampTol) term1 += p * std::log(p);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es0(rho0);
    const Eigen::MatrixXd prod = rho1 * es0.eigenvectors();
    double term2 = 0.0;
    for (Eigen::Index l = 0; l < es0.eigenvalues().size(); ++l) {
        const double q = es0.eigenvalues()[l];
        const double m =
            std::max(0.0, es0.eigenvectors().col(l).dot(prod.col(l)));
        if (q <= kEntropyClampTol) {
            if (m > 1e-12)
                return std::numeric_limits<double>::infinity();
            continue;
        }
        term2 += m * std::log(q);
    }
    return term1 - term2;
}

double relative_entropy_vs_gibbs(double s_a, double e_a, double beta,
                                 double log_z) {
    return -s_a + beta * e_a + log_z;
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.rows() != sigma.rows())
        throw std::invalid_argument("dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho);
    Eigen::VectorXd sqrt_p(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < sqrt_p.size(); ++k) {
        const double p = es.eigenvalues()[k];
        if (p < -1e-10)
            throw std::invalid_argument("rho is not positive semidefinite");
        sqrt_p[k] = std::sqrt(std::max(0.0, p));
    }
    const Eigen::MatrixXd sqrt_rho = es.eigenvectors() * sqrt_p.asDiagonal() *
                                     es.eigenvectors().transpose();
    Eigen::MatrixXd inner = sqrt_rho * sigma * sqrt_rho;
    inner = 0.5 * (inner + inner.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(inner,
                                                       Eigen::EigenvaluesOnly);
    double sum = 0.0;
    for (double mu : es2.eigenvalues()) {
        if (mu < -1e-10)
            throw std::runtime_error(
                "fidelity inner matrix has a large negative eigenvalue");
        sum += std::sqrt(std::max(0.0, mu));
    }
    const double f = sum * sum;
    if (f < -1e-9 || f > 1.0 + 1e-9)
        throw std::runtime_error("fidelity outside [0,1] beyond tolerance");
    return std::clamp(f, 0.0, 1.0);
}

double spin_correlation(const DensityMatrix& rho, int i, int j) {
    const auto dim = static_cast<std::uint64_t>(rho.rows());
    const int n_sites = std::countr_zero(dim);
    if ((std::uint64_t{1} << n_sites) != dim)
        throw std::invalid_argument("density matrix is not a qubit register");
    if (i == j || i < 0 || j < 0 || i >= n_sites || j >= n_sites)
        throw std::out_of_range("site out of range");
    double c = 0.0;
    for (std::uint64_t a = 0; a < dim; ++a)
        c += rho(a, a) * sz_bit(a, i) * sz_bit(a, j);
    return c;
}

std::vector<SweepRecord> compare_sweep(const std::vector<SweepPoint>& points,
                                       const DenseSpectrum& spectrum_a,
                                       double delta_lambda, int n_a) {
    std::vector<double> lambdas, s, e;
    for (const auto& pt : points) {
        lambdas.push_back(pt.lambda);
        s.push_back(pt.failed ? kNaN : pt.s_a);
        e.push_back(pt.failed ? kNaN : pt.e_a);
    }
    const std::vector<double> b_a =
        effective_beta(lambdas, s, e, delta_lambda);

    std::vector<SweepRecord> records(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const SweepPoint& pt = points[i];
        SweepRecord& rec = records[i];
        rec.lambda = pt.lambda;
        rec.s_a = pt.s_a;
        rec.e_a = pt.e_a;
        rec.e_b = pt.e_b;
        rec.degenerate = pt.degenerate;
        rec.b_a = b_a[i];
        rec.t_a = kNaN;
        rec.s_can = rec.e_can = kNaN;
        rec.fidelity_per_site = kNaN;
        rec.rel_entropy_red_can = rec.rel_entropy_can_red = kNaN;
        rec.schmidt_tv = kNaN;
        rec.b_defined = std::isfinite(b_a[i]) && b_a[i] > 0 && !pt.failed;
        if (!rec.b_defined) continue;

        rec.t_a = 1.0 / rec.b_a;
        const CanonicalPoint can =
            canonical_point(spectrum_a.eigenvalues, rec.b_a);
        rec.s_can = can.entropy;
        rec.e_can = can.energy;
        rec.rel_entropy_red_can =
            relative_entropy_vs_gibbs(pt.s_a, pt.e_a, rec.b_a, can.log_z);

        if (pt.rho.size() > 0) {
            const GibbsState gibbs = gibbs_state(spectrum_a, rec.b_a);
            rec.fidelity_per_site =
                std::pow(fidelity(gibbs.rho, pt.rho), 1.0 / n_a);
            rec.rel_entropy_can_red = relative_entropy(gibbs.rho, pt.rho);
        }
        const SchmidtDiagnostic diag = schmidt_boltzmann_diagnostic(
            pt.schmidt, spectrum_a.eigenvalues, rec.b_a);
        rec.schmidt_tv = diag.tv_distance;
        rec.schmidt_degenerate = diag.degenerate_levels;
    }
    return records;
}

namespace {

// Shared machinery: rows over points with defined, positive B_A; fn gets
// (row, rho_red diag correlations source, gibbs rho).
template <typename Fn>
void for_each_compare_row(const std::vector<SweepPoint>& points,
                          const DenseSpectrum& spectrum_a,
                          double delta_lambda, Fn&& fn) {
    std::vector<double> lambdas, s, e;
    for (const auto& pt : points) {
        lambdas.push_back(pt.lambda);
        s.push_back(pt.failed ? kNaN : pt.s_a);
        e.push_back(pt.failed ? kNaN : pt.e_a);
    }
    const std::vector<double> b_a =
        effective_beta(lambdas, s, e, delta_lambda);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].failed || points[i].rho.size() == 0) continue;
        if (!std::isfinite(b_a[i]) || b_a[i] <= 0) continue;
        const GibbsState gibbs = gibbs_state(spectrum_a, b_a[i]);
        fn(points[i], b_a[i], gibbs.rho);
    }
}

} // namespace

CorrelationTable correlation_difference_chain(
    const std::vector<SweepPoint>& points, const DenseSpectrum& spectrum_a,
    double delta_lambda, int n_a) {
    CorrelationTable table;
    for (int d = 1; d <= n_a / 2; ++d) table.distances.push_back(d);

    for_each_compare_row(
        points, spectrum_a, delta_lambda,
        [&](const SweepPoint& pt, double b, const DensityMatrix& rho_can) {
            std::vector<double> red, can, delta;
            for (int d : table.distances) {
                double cr = 0.0, cc = 0.0;
                for (int i = 0; i < n_a; ++i) {
                    const int j = (i + d) % n_a;
                    cr += spin_correlation(pt.rho, i, j);
                    cc += spin_correlation(rho_can, i, j);
                }
                cr /= n_a;
                cc /= n_a;
                red.push_back(cr);
                can.push_back(cc);
                delta.push_back(cc - cr);
            }
            table.lambdas.push_back(pt.lambda);
            table.t_a.push_back(1.0 / b);
            table.c_red.push_back(std::move(red));
            table.c_can.push_back(std::move(can));
            table.delta_c.push_back(std::move(delta));
        });

    table.max_abs_delta.assign(table.distances.size(), 0.0);
    for (const auto& row : table.delta_c)
        for (std::size_t k = 0; k < row.size(); ++k)
            table.max_abs_delta[k] =
                std::max(table.max_abs_delta[k], std::abs(row[k]));
    return table;
}

PairCorrelationTable correlation_difference_pairs(
    const std::vector<SweepPoint>& points, const DenseSpectrum& spectrum_a,
    double delta_lambda, int n_a) {
    PairCorrelationTable table;
    for (int i = 0; i < n_a; ++i)
        for (int j = i + 1; j < n_a; ++j) table.pairs.push_back({i, j});

    for_each_compare_row(
        points, spectrum_a, delta_lambda,
        [&](const SweepPoint& pt, double, const DensityMatrix& rho_can) {
            std::vector<double> delta;
            delta.reserve(table.pairs.size());
            for (const auto& pr : table.pairs)
                delta.push_back(spin_correlation(rho_can, pr.i, pr.j) -
                                spin_correlation(pt.rho, pr.i, pr.j));
            table.lambdas.push_back(pt.lambda);
            table.delta_c.push_back(std::move(delta));
        });
    return table;
}

std::vector<double> subsystem_b_beta(const std::vector<double>& lambdas,
                                     const std::vector<double>& entropies,
                                     const std::vector<double>& e_b,
                                     double delta_lambda) {
    return effective_beta(lambdas, entropies, e_b, delta_lambda);
}

SchmidtDiagnostic schmidt_boltzmann_diagnostic(const Eigen::VectorXd& schmidt,
                                               const Eigen::VectorXd& eps_a,
                                               double b_a) {
    if (schmidt.size() != eps_a.size())
        throw std::invalid_argument("weight/spectrum dimension mismatch");
    if (!std::isfinite(b_a))
        throw std::invalid_argument("b_a must be finite");

    // Boltzmann weights ordered by ascending energy, which is descending
    // weight for b_a > 0; Schmidt weights are sorted descending so the two
    // sequences are matched by energy ordering.
    const double e0 = eps_a.minCoeff();
    Eigen::VectorXd eps = eps_a;
    std::sort(eps.data(), eps.data() + eps.size());
    Eigen::VectorXd w(eps.size());
    for (Eigen::Index n = 0; n < eps.size(); ++n)
        w[n] = std::exp(-b_a * (eps[n] - e0));
    w /= w.sum();

    Eigen::VectorXd p = schmidt;
    std::sort(p.data(), p.data() + p.size(), std::greater<double>());

    SchmidtDiagnostic diag;
    const double scale = std::max(1.0, eps.cwiseAbs().maxCoeff());
    for (Eigen::Index n = 0; n + 1 < eps.size(); ++n)
        if (eps[n + 1] - eps[n] < 1e-10 * scale) {
            diag.degenerate_levels = true;
            break;
        }
    diag.tv_distance = 0.5 * (p - w).cwiseAbs().sum();
    return diag;
}

} // namespace entherm
