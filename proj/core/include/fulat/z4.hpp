#ifndef FULAT_Z4_HPP
#define FULAT_Z4_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "fulat/errors.hpp"
#include "fulat/int128.hpp"

namespace fulat::z4 {

using Symbol = std::uint8_t;  // value in {0,1,2,3}

class Vector {
public:
    explicit Vector(std::vector<Symbol> symbols);
    static Vector zero(std::size_t n) { return Vector(std::vector<Symbol>(n, 0)); }

    std::size_t size() const { return symbols_.size(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const { return symbols_; }

    bool operator==(const Vector&) const = default;

private:
    std::vector<Symbol> symbols_;
};

Vector add(const Vector& a, const Vector& b);
Vector negate(const Vector& a);
int lee_weight(const Vector& v);

// A Z4-linear code held as a standard-form generator matrix
//
//     ( I_k1  A    B  )
//     ( 0    2I_k2 2C )
//
// over a column permutation of the user's coordinates.  `permutation()[j]`
// is the original column shown at standard-form column j; generator_rows()
// undoes the permutation.  Immutable after construction.
class Code {
public:
    std::size_t length() const { return n_; }
    std::size_t k1() const { return k1_; }
    std::size_t k2() const { return k2_; }

    Int cardinality() const { return int_pow2(int(2 * k1_ + k2_)); }

    const std::vector<Vector>& standard_rows() const { return rows_; }
    const std::vector<std::size_t>& permutation() const { return perm_; }

    // Generator rows in the user's original column order.
    std::vector<Vector> generator_rows() const;
    Vector to_original(const Vector& standard_coords) const;

private:
    Code(std::size_t n, std::size_t k1, std::size_t k2, std::vector<Vector> rows,
         std::vector<std::size_t> perm)
        : n_(n), k1_(k1), k2_(k2), rows_(std::move(rows)), perm_(std::move(perm)) {}

    friend Code standard_form(std::span<const Vector> rows);

    std::size_t n_, k1_, k2_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> perm_;
};

// Gaussian elimination over Z4.  Pivot ties break to the leftmost column,
// topmost row; the result is the canonical standard form of the row span.
Code standard_form(std::span<const Vector> rows);
inline Code standard_form(const std::vector<Vector>& rows) {
    return standard_form(std::span<const Vector>(rows));
}

// Dual code, computed algebraically from the standard-form blocks.
Code dual(const Code& code);

namespace detail {

// Two bit-planes per vector: symbol j = lo_j + 2*hi_j.
struct SlicedRows {
    std::size_t n = 0, words = 0;
    std::vector<std::uint64_t> lo, hi;  // row-major, `words` per row

    explicit SlicedRows(const Code& code);
};

inline void add_row(std::uint64_t* lo, std::uint64_t* hi, const std::uint64_t* rlo,
                    const std::uint64_t* rhi, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t carry = lo[w] & rlo[w];
        lo[w] ^= rlo[w];
        hi[w] ^= rhi[w] ^ carry;
    }
}

// Mixed-radix odometer over the message space: k1 quaternary digits then k2
// binary digits, last digit fastest.  Incrementing digit i by 1 (mod radix)
// is a single bit-sliced row addition, so a full step costs ~1 addition
// amortized.  Calls f(lo, hi, words) for every index in [begin, end).
template <class F>
void walk(const Code& code, std::uint64_t begin, std::uint64_t end, F&& f) {
    if (begin >= end) return;
    const SlicedRows rows(code);
    const std::size_t k1 = code.k1(), k2 = code.k2(), d = k1 + k2;
    const std::size_t w = rows.words;

    std::vector<std::uint64_t> lo(w, 0), hi(w, 0);
    std::vector<unsigned> digit(d, 0);

    // Decompose `begin` (big-endian digits) and build the starting codeword.
    std::uint64_t rem = begin;
    for (std::size_t i = d; i-- > 0;) {
        const unsigned radix = i < k1 ? 4u : 2u;
        digit[i] = unsigned(rem % radix);
        rem /= radix;
        for (unsigned rep = 0; rep < digit[i]; ++rep)
            add_row(lo.data(), hi.data(), &rows.lo[i * w], &rows.hi[i * w], w);
    }

    for (std::uint64_t idx = begin;; ++idx) {
        f(lo.data(), hi.data(), w);
        if (idx + 1 == end) break;
        std::size_t i = d - 1;
        for (;;) {
            add_row(lo.data(), hi.data(), &rows.lo[i * w], &rows.hi[i * w], w);
            const unsigned radix = i < k1 ? 4u : 2u;
            if (++digit[i] < radix) break;
            digit[i] = 0;
            --i;
        }
    }
}

inline void counts_of(const std::uint64_t* lo, const std::uint64_t* hi, std::size_t words,
                      int& n13, int& n2) {
    int a = 0, b = 0;
    for (std::size_t w = 0; w < words; ++w) {
        a += std::popcount(lo[w]);
        b += std::popcount(hi[w] & ~lo[w]);
    }
    n13 = a;
    n2 = b;
}

}  // namespace detail

// Number of codewords if it fits a uint64_t; throws CapacityError otherwise.
std::uint64_t codeword_count_u64(const Code& code);

// Visits message indices [begin, end) in lexicographic message order and
// reports (n13, n2) per codeword; n0 = n - n13 - n2.  This is the hot path:
// enumeration is incremental and bit-sliced.
template <class F>
void for_each_codeword_counts(const Code& code, std::uint64_t begin, std::uint64_t end, F&& f) {
    detail::walk(code, begin, end,
                 [&](const std::uint64_t* lo, const std::uint64_t* hi, std::size_t w) {
                     int n13, n2;
                     detail::counts_of(lo, hi, w, n13, n2);
                     f(n13, n2);
                 });
}

// Visits codewords in the user's original coordinate order.
template <class F>
void for_each_codeword(const Code& code, std::uint64_t begin, std::uint64_t end, F&& f) {
    const auto& perm = code.permutation();
    const std::size_t n = code.length();
    std::vector<Symbol> symbols(n);
    detail::walk(code, begin, end,
                 [&](const std::uint64_t* lo, const std::uint64_t* hi, std::size_t) {
                     for (std::size_t j = 0; j < n; ++j) {
                         const unsigned l = unsigned(lo[j >> 6] >> (j & 63)) & 1u;
                         const unsigned h = unsigned(hi[j >> 6] >> (j & 63)) & 1u;
                         symbols[perm[j]] = Symbol(l + 2 * h);
                     }
                     f(Vector(symbols));
                 });
}

Vector codeword_at(const Code& code, std::uint64_t index);
std::vector<Vector> codewords(const Code& code);  // materialize; guarded by budget

// Minimum Lee weight over nonzero codewords.  Throws DomainError on the
// zero code, CapacityError when the code exceeds `budget` words.
int min_lee_distance(const Code& code, std::uint64_t budget = std::uint64_t(1) << 33);

}  // namespace fulat::z4

#endif
