#pragma once

#include <Eigen/Dense>

namespace entherm {

// Two coupled oscillator modes under a pairing field, diagonalized by a
// Bogoliubov rotation of angle theta. The partitioned-mode reduced state
// equals the canonical state at beta_star exactly.
struct BosonModel {
    double omega_a = 0.0;
    double omega_b = 0.0;
    double theta = 0.0;
    // derived
    double omega = 0.0;     // (omega_a + omega_b) / 2
    double big_omega_alpha = 0.0;
    double big_omega_beta = 0.0;
    double e_0 = 0.0;
    double lambda = 0.0;
};

struct BosonObservables {
    double s_a = 0.0;
    double e_a = 0.0;
    double beta_star = 0.0;  // +inf at theta = 0
    double t_star = 0.0;
    double n_be = 0.0;       // Bose-Einstein occupation at beta_star
};

BosonModel boson_from_theta(double theta, double omega_a, double omega_b);
BosonModel boson_from_lambda(double lambda, double omega_a, double omega_b);
BosonObservables boson_observables(const BosonModel& m);

// Truncated Fock-space density matrices (rho_red, rho_can(beta_star)), both
// diagonal. cutoff <= 0 auto-selects the smallest cutoff with tail weight
// tanh^{2 cutoff} theta < 1e-15 (capped at 10^4).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd>
boson_density_matrices(const BosonModel& m, int cutoff = 0);

struct FermionModel {
    double epsilon_a = 0.0;
    double epsilon_b = 0.0;
    double theta = 0.0;
    // derived
    double epsilon = 0.0;   // (epsilon_a + epsilon_b) / 2
    double xi_alpha = 0.0;
    double xi_beta = 0.0;
    double e_0 = 0.0;
    double lambda = 0.0;
};

struct FermionObservables {
    double s_a = 0.0;
    double e_a = 0.0;
    double beta_star = 0.0;
    double t_star = 0.0;
    double f_fd = 0.0;       // Fermi-Dirac occupation at beta_star
};

FermionModel fermion_from_theta(double theta, double epsilon_a,
                                double epsilon_b);
FermionModel fermion_from_lambda(double lambda, double epsilon_a,
                                 double epsilon_b);
FermionObservables fermion_observables(const FermionModel& m);

// Both 2x2 and diagonal: diag(cos^2 theta, sin^2 theta), exactly equal.
std::pair<Eigen::Matrix2d, Eigen::Matrix2d>
fermion_density_matrices(const FermionModel& m);

} // namespace entherm
