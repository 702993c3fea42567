#ifndef FULAT_CONSTRUCTIONS_HPP
#define FULAT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fulat/f2.hpp"
#include "fulat/z4.hpp"

namespace fulat {

// Small exact rational; enough for lattice bases (denominators 1 or 2) and
// volumes.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Lower-triangular Hermite normal form of the row span of an integer matrix:
// positive diagonal, entries below the diagonal reduced into [0, diag).
// The rows must span a full-rank sublattice of Z^n.
std::vector<std::vector<std::int64_t>> hermite_normal_form(
    std::vector<std::vector<std::int64_t>> rows);

struct LatticeDescriptor {
    int n = 0;
    Rational volume;
    std::vector<std::vector<Rational>> basis;  // n x n, rows generate
    z4::Code source;
};

// Lattice (1/2)(C + 4Z^n): canonical basis from the Hermite normal form of
// the stacked generators {rows of C, 4 e_i} scaled by 1/2; vol = 2^n/|C|.
LatticeDescriptor construction_a4(const z4::Code& code);

// The Z4-linear code C1 + 2C2 for a Schur-closed nested pair, presented by
// order-4 rows lifted from C1's basis and order-2 rows from a basis
// completion of C2 over C1.  Throws with a witness when the chain is not
// closed under the element-wise product.
z4::Code lift_c1_2c2(const f2::Code& c1, const f2::Code& c2);

// Dual of the lift without touching Z4 linear algebra: lift(dual(C2), dual(C1)).
z4::Code dual_of_lift(const f2::Code& c1, const f2::Code& c2);

// True iff W_{C1} = W_{C2 dual} and W_{C2} = W_{C1 dual}; then the lift is
// formally self-dual.
bool theorem3_check(const f2::Code& c1, const f2::Code& c2);

// The Reed-Muller recipe R(1,m) + 2 R(m-2,m); needs m >= 3.
z4::Code rm_unimodular(int m);

struct PackingDescriptor {
    int n = 0;
    std::uint64_t coset_count = 0;
    f2::Code c1, c2;
    bool is_lattice = false;  // the chain is Schur-closed
};

// Two-level packing (1/2)(C1 + 2C2 + 4Z^n); requires only containment
// C1 within C2.  Its theta series is evaluable from the pair's jwe whether
// or not the packing is a lattice.
PackingDescriptor construction_c_packing(const f2::Code& c1, const f2::Code& c2);

}  // namespace fulat

#endif
