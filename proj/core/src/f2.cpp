#include "fulat/f2.hpp"

#include <algorithm>

namespace fulat::f2 {

Vector Vector::from_bits(std::span<const std::uint8_t> bits) {
    Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw DomainError("binary vector entry out of range {0,1}");
        if (bits[i]) v.set_bit(i, true);
    }
    return v;
}

Vector Vector::operator^(const Vector& o) const {
    if (n_ != o.n_) throw DomainError("binary vector length mismatch");
    Vector out = *this;
    out.xor_in(o);
    return out;
}

Vector Vector::schur(const Vector& o) const {
    if (n_ != o.n_) throw DomainError("binary vector length mismatch");
    Vector out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= o.words_[w];
    return out;
}

void Vector::xor_in(const Vector& o) {
    if (n_ != o.n_) throw DomainError("binary vector length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
}

std::vector<std::uint8_t> Vector::to_bits() const {
    std::vector<std::uint8_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = bit(i) ? 1 : 0;
    return out;
}

namespace {

std::size_t leading_bit(const Vector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.bit(i)) return i;
    return v.size();
}

}  // namespace

Code::Code(std::size_t n, std::vector<Vector> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ == 0) throw DomainError("binary code length must be >= 1");
    for (const Vector& r : rows_)
        if (r.size() != n_) throw DomainError("binary code: ragged rows");
    // Build the echelon copy; a dependent row reduces to zero.
    for (const Vector& r : rows_) {
        Vector cur = reduce(r);
        if (cur.is_zero())
            throw DomainError("binary code: generator rows are linearly dependent");
        const std::size_t p = leading_bit(cur);
        auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        echelon_.insert(echelon_.begin() + (at - pivots_.begin()), cur);
        pivots_.insert(at, p);
    }
}

std::uint64_t Code::size() const {
    if (dimension() >= 64) throw CapacityError("binary codeword count does not fit 64 bits");
    return std::uint64_t(1) << dimension();
}

Vector Code::reduce(Vector v) const {
    for (std::size_t i = 0; i < echelon_.size(); ++i)
        if (v.bit(pivots_[i])) v.xor_in(echelon_[i]);
    return v;
}

bool Code::contains(const Vector& v) const {
    if (v.size() != n_) return false;
    return reduce(v).is_zero();
}

Code dual(const Code& code) {
    const std::size_t n = code.length(), k = code.dimension();
    // Reduced echelon form with remembered pivot columns.
    std::vector<Vector> rref;
    std::vector<std::size_t> pivots;
    for (const Vector& r : code.rows()) {
        Vector cur = r;
        for (std::size_t i = 0; i < rref.size(); ++i)
            if (cur.bit(pivots[i])) cur.xor_in(rref[i]);
        const std::size_t p = leading_bit(cur);
        for (std::size_t i = 0; i < rref.size(); ++i)
            if (rref[i].bit(p)) rref[i].xor_in(cur);
        rref.push_back(cur);
        pivots.push_back(p);
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    // One dual basis row per free column f: 1 at f, and the rref entries of
    // column f copied to the pivot positions.
    std::vector<Vector> rows;
    rows.reserve(n - k);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector row(n);
        row.set_bit(f, true);
        for (std::size_t i = 0; i < rref.size(); ++i)
            if (rref[i].bit(f)) row.set_bit(pivots[i], true);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        // Dual of the full space is the zero code; represent it with no rows.
        return Code(n, {});
    }
    return Code(n, std::move(rows));
}

Code reed_muller(int r, int m) {
    if (m < 0 || r < 0 || r > m)
        throw DomainError("reed_muller: need 0 <= r <= m");
    if (m >= 26) throw CapacityError("reed_muller: 2^m length too large");
    const std::size_t n = std::size_t(1) << m;

    std::vector<Vector> rows;
    // Degree-graded subsets, lexicographic within a degree.
    std::vector<int> subset;
    auto emit = [&]() {
        std::uint64_t mask = 0;
        for (int i : subset) mask |= std::uint64_t(1) << i;
        Vector row(n);
        for (std::size_t j = 0; j < n; ++j)
            if ((j & mask) == mask) row.set_bit(j, true);
        rows.push_back(std::move(row));
    };
    auto gen = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int i = next; i <= m - remaining; ++i) {
            subset.push_back(i);
            self(self, i + 1, remaining - 1);
            subset.pop_back();
        }
    };
    for (int deg = 0; deg <= r; ++deg) gen(gen, 0, deg);
    return Code(n, std::move(rows));
}

std::optional<SchurViolation> schur_violation(const Code& c1, const Code& c2) {
    if (c1.length() != c2.length())
        throw DomainError("schur check: codes must have equal length");
    const auto& rows = c1.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (!c2.contains(rows[i].schur(rows[j]))) return SchurViolation{i, j};
    return std::nullopt;
}

bool schur_closed(const Code& c1, const Code& c2) { return !schur_violation(c1, c2); }

WePolynomial weight_enumerator(const Code& code) {
    const std::size_t n = code.length();
    std::vector<std::uint64_t> counts(n + 1, 0);
    for_each_codeword(code, [&](const Vector& v) { ++counts[std::size_t(v.weight())]; });
    WePolynomial out(int(n));
    for (std::size_t w = 0; w <= n; ++w)
        if (counts[w]) out.add_term({int(n - w), int(w)}, Int(counts[w]));
    return out;
}

JwePolynomial joint_weight_enumerator(const Code& c1, const Code& c2) {
    if (c1.length() != c2.length())
        throw DomainError("joint weight enumerator: codes must have equal length");
    const std::size_t n = c1.length();
    const std::size_t kk = c1.dimension() + c2.dimension();
    if (kk > 26)
        throw CapacityError(
            "joint weight enumerator: |C1|*|C2| exceeds the 2^26 double-enumeration cap");

    // Dense (d01, d10, d11) cube of counters; d00 = n - d01 - d10 - d11.
    const std::size_t side = n + 1;
    std::vector<std::uint64_t> counts(side * side * side, 0);
    for_each_codeword(c1, [&](const Vector& w1) {
        for_each_codeword(c2, [&](const Vector& w2) {
            int d11 = 0, d10 = 0, d01 = 0;
            const auto& a = w1.words();
            const auto& b = w2.words();
            for (std::size_t w = 0; w < a.size(); ++w) {
                d11 += std::popcount(a[w] & b[w]);
                d10 += std::popcount(a[w] & ~b[w]);
                d01 += std::popcount(~a[w] & b[w]);
            }
            // Bits beyond n are zero in both words, so they only inflate d00,
            // which is recomputed from n below.
            ++counts[(std::size_t(d01) * side + std::size_t(d10)) * side + std::size_t(d11)];
        });
    });
    JwePolynomial out(int(n));
    for (std::size_t d01 = 0; d01 <= n; ++d01)
        for (std::size_t d10 = 0; d10 + d01 <= n; ++d10)
            for (std::size_t d11 = 0; d11 + d10 + d01 <= n; ++d11) {
                const std::uint64_t c = counts[(d01 * side + d10) * side + d11];
                if (c)
                    out.add_term({int(n - d01 - d10 - d11), int(d01), int(d10), int(d11)}, Int(c));
            }
    return out;
}

}  // namespace fulat::f2
