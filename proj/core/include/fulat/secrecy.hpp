#ifndef FULAT_SECRECY_HPP
#define FULAT_SECRECY_HPP

#include <span>
#include <utility>
#include <vector>

#include "fulat/enumerators.hpp"

namespace fulat::secrecy {

// Secrecy function  Xi(tau) = Theta_{nu Z^n}(i tau) / Theta_L(i tau)  for the
// lattice of the given swe; nu = (2^n/|C|)^{1/n} from vol = 2^n/|C|.
// Works for any code, formally self-dual or not.
double secrecy_function(const SwePolynomial& p, Int code_cardinality, double tau);

// h(t) = swe(1+t, (1-t^4)^{1/4}, 1-t) on 0 < t < 1; minimizing h maximizes
// the secrecy function of a formally self-dual code.
double h_eval(const SwePolynomial& p, double t);

// t(tau) = theta4(tau)/theta3(tau); strictly increasing from 0 to 1.
double tau_to_t(double tau);

struct SecrecyProfile {
    int n = 0;
    double nu = 1.0;
    std::vector<std::pair<double, double>> samples;  // (tau, Xi(tau))
    double t_star = 0.0;
    double tau_star = 0.0;
    double gain = 0.0;
    double h_min = 0.0;
    bool plateau = false;  // h is flat / has non-unique minimizers at grid scale
};

// Locates the global minimum of h on (0,1): 4096-point uniform scan, then
// golden-section refinement to |dt| <= 1e-12.  Requires a formally self-dual
// input; gain = 2^n / h(t*), tau* recovered by bisection of tau_to_t.
SecrecyProfile secrecy_gain(const SwePolynomial& p);

struct ConjectureRow {
    double tau, xi, xi_inv_tau, symmetry_residual;
};

struct ConjectureReport {
    double xi_at_one = 0.0;
    double tau_max = 0.0;
    double xi_max = 0.0;
    bool max_at_symmetry_point = false;  // observed on this grid, not asserted
    std::vector<ConjectureRow> rows;
};

// Evaluates Xi on the grid and reports whether the maximum sits at tau = 1.
// Purely observational.
ConjectureReport conjecture_report(const SwePolynomial& p, std::span<const double> tau_grid);

}  // namespace fulat::secrecy

#endif
