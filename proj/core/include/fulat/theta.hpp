#ifndef FULAT_THETA_HPP
#define FULAT_THETA_HPP

#include <cstdint>
#include <map>

#include "fulat/enumerators.hpp"
#include "fulat/z4.hpp"

namespace fulat::theta {

// Jacobi theta constants on the imaginary axis, q = e^{-pi tau}:
//   kind 2:  sum over m of q^{(m+1/2)^2}
//   kind 3:  sum over m of q^{m^2}
//   kind 4:  sum over m of (-q)^{m^2}
// The series is truncated once the next term drops below 1e-17 of the
// partial sum (hard cap 10000 terms); tau below 1e-3 is refused because the
// series degenerates there.  Relative error <= 1e-15 for tau >= 0.05.
double jacobi_theta(int kind, double tau);

// Theta series of the lattice (1/2)(C + 4Z^n) at z = i*tau, evaluated from
// the code's swe as swe(theta3(4 tau), theta2(tau)/2, theta2(4 tau)).
double theta_a4(const SwePolynomial& p, double tau);

// Theta series of the two-level packing (1/2)(C1 + 2 C2 + 4Z^n) from the
// joint weight enumerator: jwe(theta3(4t), theta2(4t), theta2(t)/2, theta2(t)/2).
double theta_construction_c(const JwePolynomial& j, double tau);

// Theta series of the scaled integer lattice nu * Z^n: theta3(nu^2 tau)^n.
double theta_zn(double nu, int n, double tau);

// Formal q-expansion of a theta series: exact lattice-point counts keyed by
// squared norm.  Norms of (1/2)(C + 4Z^n) are quarter-integers, so keys are
// stored as 4 * ||x||^2.
class QExpansion {
public:
    QExpansion(int n, std::int64_t max_norm4) : n_(n), max_norm4_(max_norm4) {}

    int dimension() const { return n_; }
    std::int64_t max_norm4() const { return max_norm4_; }
    const std::map<std::int64_t, std::uint64_t>& counts() const { return counts_; }

    std::uint64_t count_at(std::int64_t norm4) const {
        auto it = counts_.find(norm4);
        return it == counts_.end() ? 0 : it->second;
    }
    void add(std::int64_t norm4, std::uint64_t count);

    // Partial sum  sum counts * e^{-pi tau norm}.
    double evaluate(double tau) const;

    bool operator==(const QExpansion&) const = default;

private:
    int n_;
    std::int64_t max_norm4_;
    std::map<std::int64_t, std::uint64_t> counts_;
};

// Direct-enumeration oracle: counts every lattice point x = (c + 4z)/2 with
// 4*||x||^2 <= max_norm4, walking all codewords and branching on z.
// Requires n <= 12 and max_norm4 <= 64.
QExpansion q_expansion_a4(const z4::Code& code, std::int64_t max_norm4);

// The same expansion derived formally from the swe: per-coordinate integer
// q-series for symbols 0 / {1,3} / 2, convolved exactly.  Independent of the
// enumeration route above.
QExpansion q_expansion_from_swe(const SwePolynomial& p, std::int64_t max_norm4);

// Residual of the theta transformation formula
//   Theta_L(i tau) - vol(L*) tau^{-n/2} Theta_{L*}(i / tau)
// with both theta series evaluated through theta_a4.
double jacobi_transform_residual(const SwePolynomial& p, const SwePolynomial& p_dual,
                                 double vol_dual, double tau);

}  // namespace fulat::theta

#endif
