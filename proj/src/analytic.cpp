#include "entherm/analytic.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace entherm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void stability_error(const char* kind, double limit) {
    std::ostringstream msg;
    msg << kind << " model unstable: requires |theta| < " << limit;
    throw std::invalid_argument(msg.str());
}

double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

} // namespace

BosonModel boson_from_theta(double theta, double omega_a, double omega_b) {
    if (omega_a <= 0 || omega_b <= 0)
        throw std::invalid_argument("mode frequencies must be positive");
    BosonModel m;
    m.omega_a = omega_a;
    m.omega_b = omega_b;
    m.theta = theta;
    m.omega = 0.5 * (omega_a + omega_b);
    const double ch2 = std::cosh(theta) * std::cosh(theta);
    const double sh2 = std::sinh(theta) * std::sinh(theta);
    m.big_omega_alpha = (omega_a * ch2 - omega_b * sh2) / (ch2 + sh2);
    m.big_omega_beta = (omega_b * ch2 - omega_a * sh2) / (ch2 + sh2);
    m.e_0 = m.omega / (ch2 + sh2);
    m.lambda = m.omega * std::tanh(2.0 * theta);
    if (m.big_omega_alpha <= 0 || m.big_omega_beta <= 0) {
        const double r = std::min(omega_b / omega_a, omega_a / omega_b);
        stability_error("boson", std::atanh(std::sqrt(r)));
    }
    return m;
}

BosonModel boson_from_lambda(double lambda, double omega_a, double omega_b) {
    const double omega = 0.5 * (omega_a + omega_b);
    if (std::abs(lambda) >= omega)
        throw std::invalid_argument(
            "boson pairing requires |lambda| < (omega_a + omega_b)/2");
    return boson_from_theta(0.5 * std::atanh(lambda / omega), omega_a,
                            omega_b);
}

BosonObservables boson_observables(const BosonModel& m) {
    const double ch2 = std::cosh(m.theta) * std::cosh(m.theta);
    const double sh2 = std::sinh(m.theta) * std::sinh(m.theta);
    BosonObservables o;
    o.s_a = xlogx(ch2) - xlogx(sh2);
    o.e_a = m.omega_a * (sh2 + 0.5);
    if (sh2 == 0.0) {
        o.beta_star = kInf;
        o.t_star = 0.0;
        o.n_be = 0.0;
        return o;
    }
    const double tanh2 = sh2 / ch2;
    o.beta_star = -std::log(tanh2) / m.omega_a;
    o.t_star = 1.0 / o.beta_star;
    o.n_be = 1.0 / (std::exp(o.beta_star * m.omega_a) - 1.0);
    return o;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd>
boson_density_matrices(const BosonModel& m, int cutoff) {
    const double t2 = std::tanh(m.theta) * std::tanh(m.theta);
    if (cutoff <= 0) {
        cutoff = 1;
        while (cutoff < 10000 && std::pow(t2, cutoff) >= 1e-15) ++cutoff;
    }
    if (t2 > 0 && std::pow(t2, cutoff) >= 1e-14)
        throw std::invalid_argument("insufficient Fock cutoff");

    const double ch2 = std::cosh(m.theta) * std::cosh(m.theta);
    Eigen::MatrixXd red = Eigen::MatrixXd::Zero(cutoff, cutoff);
    Eigen::MatrixXd can = Eigen::MatrixXd::Zero(cutoff, cutoff);
    const BosonObservables o = boson_observables(m);
    const double boltz = t2;  // e^{-beta_star omega_a}
    for (int n = 0; n < cutoff; ++n) {
        red(n, n) = std::pow(t2, n) / ch2;
        can(n, n) = (1.0 - boltz) * std::pow(boltz, n);
    }
    if (t2 == 0.0) can(0, 0) = 1.0;
    return {red, can};
}

FermionModel fermion_from_theta(double theta, double epsilon_a,
                                double epsilon_b) {
    if (epsilon_a <= 0 || epsilon_b <= 0)
        throw std::invalid_argument("mode energies must be positive");
    FermionModel m;
    m.epsilon_a = epsilon_a;
    m.epsilon_b = epsilon_b;
    m.theta = theta;
    m.epsilon = 0.5 * (epsilon_a + epsilon_b);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    m.xi_alpha = epsilon_a * c2 - epsilon_b * s2;
    m.xi_beta = epsilon_b * c2 - epsilon_a * s2;
    m.e_0 = -m.epsilon * (c2 - s2);
    m.lambda = m.epsilon * std::tan(2.0 * theta);
    // The theta = +-pi/4 boundary (xi = 0 for equal energies) is kept: it is
    // the lambda -> infinity asymptote.
    if (m.xi_alpha < -1e-12 || m.xi_beta < -1e-12) {
        const double r = std::min(epsilon_b / epsilon_a,
                                  epsilon_a / epsilon_b);
        stability_error("fermion", std::atan(std::sqrt(r)));
    }
    return m;
}

FermionModel fermion_from_lambda(double lambda, double epsilon_a,
                                 double epsilon_b) {
    const double epsilon = 0.5 * (epsilon_a + epsilon_b);
    return fermion_from_theta(0.5 * std::atan(lambda / epsilon), epsilon_a,
                              epsilon_b);
}

FermionObservables fermion_observables(const FermionModel& m) {
    const double c2 = std::cos(m.theta) * std::cos(m.theta);
    const double s2 = std::sin(m.theta) * std::sin(m.theta);
    FermionObservables o;
    o.s_a = 0.0 - xlogx(c2) - xlogx(s2);  // 0.0 + keeps +0 at theta = 0
    o.e_a = m.epsilon_a * (s2 - 0.5);
    if (s2 < 1e-300) {
        o.beta_star = kInf;
        o.t_star = 0.0;
        o.f_fd = 0.0;
        return o;
    }
    o.beta_star = -std::log(s2 / c2) / m.epsilon_a;
    o.t_star = o.beta_star == 0.0 ? kInf : 1.0 / o.beta_star;
    o.f_fd = 1.0 / (std::exp(o.beta_star * m.epsilon_a) + 1.0);
    return o;
}

std::pair<Eigen::Matrix2d, Eigen::Matrix2d>
fermion_density_matrices(const FermionModel& m) {
    const double c2 = std::cos(m.theta) * std::cos(m.theta);
    const double s2 = std::sin(m.theta) * std::sin(m.theta);
    Eigen::Matrix2d red = Eigen::Matrix2d::Zero();
    red(0, 0) = c2;
    red(1, 1) = s2;
    return {red, red};
}

} // namespace entherm
