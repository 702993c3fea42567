#ifndef FULAT_F2_HPP
#define FULAT_F2_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fulat/enumerators.hpp"
#include "fulat/errors.hpp"

namespace fulat::f2 {

// Bit-packed binary vector.
class Vector {
public:
    explicit Vector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
    static Vector from_bits(std::span<const std::uint8_t> bits);

    std::size_t size() const { return n_; }
    bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set_bit(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i % 64);
        if (v)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }

    int weight() const {
        int w = 0;
        for (std::uint64_t x : words_) w += std::popcount(x);
        return w;
    }
    bool is_zero() const {
        for (std::uint64_t x : words_) if (x) return false;
        return true;
    }

    Vector operator^(const Vector& o) const;        // sum over F2
    Vector schur(const Vector& o) const;            // element-wise product
    void xor_in(const Vector& o);

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint8_t> to_bits() const;

    bool operator==(const Vector&) const = default;

private:
    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

// Binary linear code with a fixed, caller-chosen basis.  Rows are kept
// exactly as given (Reed-Muller generator matrices stay recognizable); a
// reduced echelon copy is kept alongside for membership tests.
class Code {
public:
    Code(std::size_t n, std::vector<Vector> rows);  // rows must be independent

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return rows_.size(); }
    std::uint64_t size() const;  // 2^k

    const std::vector<Vector>& rows() const { return rows_; }

    bool contains(const Vector& v) const;
    // Reduce v against the echelon basis; zero result means membership.
    Vector reduce(Vector v) const;

private:
    std::size_t n_;
    std::vector<Vector> rows_;
    std::vector<Vector> echelon_;
    std::vector<std::size_t> pivots_;
};

Code dual(const Code& code);

// Reed-Muller code R(r, m): evaluation vectors of all m-variable Boolean
// monomials of degree <= r, in graded-lexicographic subset order; variable
// x_i is bit i of the evaluation point.
Code reed_muller(int r, int m);

struct SchurViolation {
    std::size_t i, j;  // offending pair of C1 basis rows (i == j: containment)
};

// First violation of "C1 subset of C2 and C1 closed into C2 under the
// element-wise product", if any.  Checking basis pairs suffices because the
// product is bilinear over F2.
std::optional<SchurViolation> schur_violation(const Code& c1, const Code& c2);
bool schur_closed(const Code& c1, const Code& c2);

WePolynomial weight_enumerator(const Code& code);

// Joint weight enumerator by double enumeration; refuses |C1|*|C2| > 2^26.
JwePolynomial joint_weight_enumerator(const Code& c1, const Code& c2);

// Visits all 2^k codewords (message-lexicographic order).
template <class F>
void for_each_codeword(const Code& code, F&& f) {
    const std::size_t k = code.dimension();
    if (k >= 64) throw CapacityError("binary codeword count does not fit 64 bits");
    Vector cur(code.length());
    const std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t idx = 0;; ++idx) {
        f(cur);
        if (idx + 1 == total) break;
        // Binary odometer: flip rows for every trailing-carry digit.
        std::uint64_t change = idx ^ (idx + 1);
        std::size_t i = k;
        while (change) {
            cur.xor_in(code.rows()[--i]);
            change >>= 1;
        }
    }
}

}  // namespace fulat::f2

#endif
