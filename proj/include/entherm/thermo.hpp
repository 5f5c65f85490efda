#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entherm/canonical.hpp"
#include "entherm/eigensolver.hpp"
#include "entherm/entanglement.hpp"
#include "entherm/lattice.hpp"

namespace entherm {

struct SweepOptions {
    double tol = 1e-10;
    int max_iter = 1000;
    std::uint64_t seed = 1;
    // Keep rho_A (and its Schmidt weights) per point; needed for fidelity,
    // relative entropy and correlations. Costs 8 * 4^{N_A} bytes per point.
    bool keep_rho = true;
    // Gap below degeneracy_tol_factor * j_a flags the point: the reduced
    // density matrix is then ill-defined.
    double degeneracy_tol_factor = 1e-8;
};

struct SweepPoint {
    double lambda = 0.0;
    double ground_energy = 0.0;
    double gap_estimate = 0.0;
    bool degenerate = false;
    bool failed = false;
    std::string error;
    double s_a = 0.0;
    double e_a = 0.0;
    double e_b = 0.0;
    Eigen::VectorXd schmidt;  // eigenvalues of rho_A, descending
    DensityMatrix rho;        // empty unless keep_rho
};

// One Lanczos ground state plus entanglement report per grid point.
// Points are independent and run concurrently; solver failures are recorded
// per point without aborting the sweep.
std::vector<SweepPoint> lambda_sweep(const BondList& cluster, double j_a,
                                     double j_b,
                                     const std::vector<double>& lambdas,
                                     const SweepOptions& opt = {});

std::vector<double> uniform_lambda_grid(double lambda_min, double lambda_max,
                                        double dlambda);

// B_A by central finite differences of S_A and E_A over lambda. Defined only
// where both neighbors sit at spacing delta_lambda; NaN at endpoints, at
// non-uniform spots, and where |dE| < 1e-12.
std::vector<double> effective_beta(const std::vector<double>& lambdas,
                                   const std::vector<double>& entropies,
                                   const std::vector<double>& energies,
                                   double delta_lambda);

// D(rho1|rho0) = Tr[rho1 ln rho1] - Tr[rho1 ln rho0]; +inf when rho0 is not
// strictly positive on the support of rho1.
double relative_entropy(const DensityMatrix& rho1, const DensityMatrix& rho0);

// Closed form of D(rho_red|rho_can(beta)) = -S_A + beta E_A + ln Z_A.
double relative_entropy_vs_gibbs(double s_a, double e_a, double beta,
                                 double log_z);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clipped to [0,1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// C_ij = Tr[rho Sz_i Sz_j] by the diagonal contraction.
double spin_correlation(const DensityMatrix& rho, int i, int j);

struct SweepRecord {
    double lambda = 0.0;
    double s_a = 0.0, e_a = 0.0, e_b = 0.0;
    bool degenerate = false;
    bool b_defined = false;
    double b_a = 0.0, t_a = 0.0;
    double s_can = 0.0, e_can = 0.0;  // canonical values at B_A
    double fidelity_per_site = 0.0;
    double rel_entropy_red_can = 0.0;
    double rel_entropy_can_red = 0.0;
    double schmidt_tv = 0.0;
    bool schmidt_degenerate = false;
};

// Per-lambda bundle of entanglement vs canonical quantities at B_A(lambda).
// spectrum_a is the full spectrum of the isolated H_A (all Sz sectors).
std::vector<SweepRecord> compare_sweep(const std::vector<SweepPoint>& points,
                                       const DenseSpectrum& spectrum_a,
                                       double delta_lambda, int n_a);

struct CorrelationTable {
    // Chain aggregation by distance |i-j| in [1, N_A/2]; rows follow the
    // sweep points that have a defined B_A.
    std::vector<int> distances;
    std::vector<double> lambdas;
    std::vector<double> t_a;
    std::vector<std::vector<double>> c_red;     // [row][distance index]
    std::vector<std::vector<double>> c_can;
    std::vector<std::vector<double>> delta_c;   // c_can - c_red
    std::vector<double> max_abs_delta;          // per distance, over rows
};

CorrelationTable correlation_difference_chain(
    const std::vector<SweepPoint>& points, const DenseSpectrum& spectrum_a,
    double delta_lambda, int n_a);

// Per-pair correlation differences (no distance collapse), for the tilted
// 2D clusters.
struct PairCorrelationTable {
    std::vector<Bond> pairs;
    std::vector<double> lambdas;
    std::vector<std::vector<double>> delta_c;  // [row][pair index]
};

PairCorrelationTable correlation_difference_pairs(
    const std::vector<SweepPoint>& points, const DenseSpectrum& spectrum_a,
    double delta_lambda, int n_a);

// B_B from central differences of (S_A, E_B); S_B(lambda) = S_A(lambda).
std::vector<double> subsystem_b_beta(const std::vector<double>& lambdas,
                                     const std::vector<double>& entropies,
                                     const std::vector<double>& e_b,
                                     double delta_lambda);

struct SchmidtDiagnostic {
    double tv_distance = 0.0;       // sum |p_n - w_n| / 2
    bool degenerate_levels = false; // energy-ordering ambiguity
};

// Compares descending Schmidt weights against Boltzmann weights of the H_A
// spectrum at inverse temperature b_a, matched by energy ordering.
SchmidtDiagnostic schmidt_boltzmann_diagnostic(const Eigen::VectorXd& schmidt,
                                               const Eigen::VectorXd& eps_a,
                                               double b_a);

} // namespace entherm
