#ifndef FULAT_ENUMERATORS_HPP
#define FULAT_ENUMERATORS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>

#include "fulat/errors.hpp"
#include "fulat/int128.hpp"
#include "fulat/z4.hpp"

namespace fulat {

// Homogeneous polynomial with exact integer coefficients, sparse over
// exponent D-tuples.  Terms are kept sorted by exponent tuple so that
// serialization is canonical.
template <std::size_t D>
class HomogeneousPoly {
public:
    using Exponents = std::array<int, D>;
    using TermMap = std::map<Exponents, Int>;

    explicit HomogeneousPoly(int degree) : degree_(degree) {
        if (degree < 0) throw DomainError("polynomial degree must be nonnegative");
    }

    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Int coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Exponents& e, Int c) {
        if (c == 0) return;
        int sum = 0;
        for (int x : e) {
            if (x < 0) throw DomainError("negative exponent in homogeneous polynomial");
            sum += x;
        }
        if (sum != degree_) throw DomainError("term does not match the polynomial degree");
        Int& slot = terms_[e];
        slot = checked_add(slot, c);
        if (slot == 0) terms_.erase(e);
    }

    Int mass() const {
        Int m = 0;
        for (const auto& [e, c] : terms_) m = checked_add(m, c);
        return m;
    }

    // Evaluate at a real point; coefficients are converted to double, which
    // keeps relative error at machine epsilon per term.
    double evaluate(std::span<const double, D> point) const;

    bool operator==(const HomogeneousPoly&) const = default;

private:
    int degree_;
    TermMap terms_;
};

using SwePolynomial = HomogeneousPoly<3>;  // exponents (n0, n1+n3, n2) of (a, b, c)
using WePolynomial = HomogeneousPoly<2>;   // exponents (n - w, w) of (x, y)
using JwePolynomial = HomogeneousPoly<4>;  // exponents (d00, d01, d10, d11) of (a, b, c, d)

struct EnumerationOptions {
    std::uint64_t budget = std::uint64_t(1) << 33;  // max codewords to visit
    unsigned threads = 0;                           // 0 = hardware concurrency
};

// Exact symmetrized weight enumerator by full codeword enumeration.
SwePolynomial swe_from_code(const z4::Code& code, const EnumerationOptions& opts = {});

// swe of the dual code: (1/|C|) swe_C(a+2b+c, a-c, a-2b+c), expanded exactly.
// `dual_cardinality` must equal 4^n / mass and is the mass of the result.
SwePolynomial macwilliams_swe(const SwePolynomial& p, Int dual_cardinality);

// True iff p equals its own MacWilliams transform (requires mass = 2^n).
bool is_formally_self_dual(const SwePolynomial& p);

// swe of C1 + 2C2 from the joint weight enumerator: substitute (a, c, b, b).
SwePolynomial swe_from_jwe(const JwePolynomial& j);

// jwe of the dual pair: (1/(|C1||C2|)) jwe(a+b+c+d, a+b-c-d, a-b+c-d, a-b-c+d).
JwePolynomial macwilliams_jwe(const JwePolynomial& j, Int c1_dual_cardinality,
                              Int c2_dual_cardinality);

// Binary MacWilliams transform with kernel (x+y, x-y).
WePolynomial binary_macwilliams(const WePolynomial& p, Int dual_cardinality);

}  // namespace fulat

#endif
