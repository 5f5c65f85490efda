#pragma once

#include <vector>

#include <Eigen/Dense>

#include "entherm/basis.hpp"

namespace entherm {

// Dense real symmetric PSD unit-trace matrix over a 2^{N_A} product space.
using DensityMatrix = Eigen::MatrixXd;

// Eigenvalues of a density matrix below this are treated as exactly zero
// in entropy and spectrum evaluations.
inline constexpr double kEntropyClampTol = 1e-14;

struct EntanglementReport {
    double lambda = 0.0;
    double s_a = 0.0;  // nats
    double e_a = 0.0;
    double e_b = 0.0;
};

// rho_A = C C^T where C is the D_A x D_B amplitude matrix of the ground
// state, with the sector amplitudes scattered into the full tensor layout
// (A = low bits of the configuration).
DensityMatrix reduced_density_matrix(const StateVector& ground, int n_a);

// Mirrored trace: rho_B = C^T C over subsystem B's local space.
DensityMatrix reduced_density_matrix_b(const StateVector& ground, int n_a);

// -sum p ln p with 0 ln 0 = 0; rejects eigenvalues below -1e-8.
double von_neumann_entropy(const DensityMatrix& rho);

// Tr[rho h].
double subsystem_energy(const DensityMatrix& rho, const Eigen::MatrixXd& h);

// Spectrum of -ln rho, ascending; clamped levels appear as +inf sentinels
// at the tail.
std::vector<double> entanglement_spectrum(const DensityMatrix& rho);

} // namespace entherm
