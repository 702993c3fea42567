#include "fulat/secrecy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fulat/theta.hpp"

namespace fulat::secrecy {

namespace {

double nu_of(int n, Int cardinality) {
    if (cardinality <= 0) throw DomainError("secrecy_function: cardinality must be positive");
    // vol = 2^n/|C|; nu = vol^{1/n}.  |C| = 2^n gives exactly nu = 1.
    if (cardinality == int_pow2(n)) return 1.0;
    const double log_card = std::log(double(cardinality));
    return std::exp((double(n) * std::numbers::ln2 - log_card) / double(n));
}

}  // namespace

double secrecy_function(const SwePolynomial& p, Int code_cardinality, double tau) {
    const int n = p.degree();
    const double nu = nu_of(n, code_cardinality);
    return theta::theta_zn(nu, n, tau) / theta::theta_a4(p, tau);
}

double h_eval(const SwePolynomial& p, double t) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("h_eval: t must lie in (0,1)");
    const std::array<double, 3> point = {1.0 + t, std::pow(1.0 - t * t * t * t, 0.25), 1.0 - t};
    return p.evaluate(std::span<const double, 3>(point));
}

double tau_to_t(double tau) {
    return theta::jacobi_theta(4, tau) / theta::jacobi_theta(3, tau);
}

SecrecyProfile secrecy_gain(const SwePolynomial& p) {
    if (!is_formally_self_dual(p))
        throw DomainError(
            "secrecy_gain: input is not formally self-dual; the h-reduction is only valid for "
            "formally self-dual enumerators (use secrecy_function directly instead)");
    const int n = p.degree();

    // Global scan: h may in principle have several minima, so a uniform grid
    // comes before any local refinement.
    constexpr int kScan = 4096;
    std::vector<double> hs(kScan);
    int imin = 0;
    for (int i = 0; i < kScan; ++i) {
        const double t = double(i + 1) / double(kScan + 1);
        hs[i] = h_eval(p, t);
        if (hs[i] < hs[imin]) imin = i;
    }

    // Plateau report: grid points essentially tied with the minimum that are
    // not neighbors of it.
    SecrecyProfile out;
    const double tie = hs[imin] * (1.0 + 1e-9);
    for (int i = 0; i < kScan; ++i)
        if (hs[i] <= tie && std::abs(i - imin) > 1) out.plateau = true;

    // Golden-section refinement on the bracketing interval.
    double a = double(std::max(0, imin)) / double(kScan + 1);          // t_{imin-1}
    double b = double(std::min(kScan + 1, imin + 2)) / double(kScan + 1);  // t_{imin+1}
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = h_eval(p, c), fd = h_eval(p, d);
    while (b - a > 1e-12) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = h_eval(p, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = h_eval(p, d);
        }
    }
    out.n = n;
    out.nu = 1.0;
    out.t_star = 0.5 * (a + b);
    out.h_min = h_eval(p, out.t_star);
    out.gain = double(int_pow2(n)) / out.h_min;

    // tau* from the monotone map t(tau), bisected to 1e-9.
    double lo = 1e-3, hi = 30.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (tau_to_t(mid) < out.t_star)
            lo = mid;
        else
            hi = mid;
    }
    out.tau_star = 0.5 * (lo + hi);

    // Sampled profile for export: log-spaced grid over [1/8, 8], tau = 1
    // landing exactly on the middle sample.
    const Int mass = p.mass();
    constexpr int kSamples = 129;
    out.samples.reserve(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        const double tau = std::exp2(3.0 * double(i - (kSamples - 1) / 2) / double((kSamples - 1) / 2));
        out.samples.emplace_back(tau, secrecy_function(p, mass, tau));
    }
    return out;
}

ConjectureReport conjecture_report(const SwePolynomial& p, std::span<const double> tau_grid) {
    if (!is_formally_self_dual(p))
        throw DomainError("conjecture_report: input is not formally self-dual");
    const Int mass = p.mass();
    ConjectureReport rep;
    rep.xi_at_one = secrecy_function(p, mass, 1.0);
    rep.tau_max = 1.0;
    rep.xi_max = rep.xi_at_one;
    rep.rows.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        ConjectureRow row;
        row.tau = tau;
        row.xi = secrecy_function(p, mass, tau);
        row.xi_inv_tau = secrecy_function(p, mass, 1.0 / tau);
        row.symmetry_residual = row.xi - row.xi_inv_tau;
        if (row.xi > rep.xi_max) {
            rep.xi_max = row.xi;
            rep.tau_max = tau;
        }
        rep.rows.push_back(row);
    }
    rep.max_at_symmetry_point = rep.xi_at_one + 1e-10 >= rep.xi_max;
    return rep;
}

}  // namespace fulat::secrecy
