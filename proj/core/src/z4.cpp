#include "fulat/z4.hpp"

#include <algorithm>
#include <numeric>

namespace fulat::z4 {

Vector::Vector(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (Symbol s : symbols_)
        if (s > 3) throw DomainError("Z4 vector symbol out of range {0,1,2,3}");
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DomainError("Z4 vector length mismatch");
    std::vector<Symbol> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Symbol((a[i] + b[i]) & 3);
    return Vector(std::move(out));
}

Vector negate(const Vector& a) {
    std::vector<Symbol> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Symbol((4 - a[i]) & 3);
    return Vector(std::move(out));
}

int lee_weight(const Vector& v) {
    static constexpr int w[4] = {0, 1, 2, 1};
    int sum = 0;
    for (Symbol s : v.symbols()) sum += w[s];
    return sum;
}

std::vector<Vector> Code::generator_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const Vector& r : rows_) out.push_back(to_original(r));
    return out;
}

Vector Code::to_original(const Vector& standard_coords) const {
    if (standard_coords.size() != n_) throw DomainError("Z4 vector length mismatch");
    std::vector<Symbol> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[perm_[j]] = standard_coords[j];
    return Vector(std::move(out));
}

Code standard_form(std::span<const Vector> rows) {
    if (rows.empty()) throw DomainError("standard_form: at least one generator row is required");
    const std::size_t n = rows[0].size();
    if (n == 0) throw DomainError("standard_form: rows must have length >= 1");
    for (const Vector& r : rows)
        if (r.size() != n) throw DomainError("standard_form: ragged rows");

    std::vector<std::vector<Symbol>> m;
    m.reserve(rows.size());
    for (const Vector& r : rows) m.emplace_back(r.symbols().begin(), r.symbols().end());

    auto subtract = [n](std::vector<Symbol>& dst, const std::vector<Symbol>& src, Symbol factor) {
        for (std::size_t j = 0; j < n; ++j)
            dst[j] = Symbol((dst[j] + (4 - factor) * src[j]) & 3);
    };

    // Phase 1: unit pivots, scanning columns left to right.  Afterwards every
    // unprocessed row has entries in {0,2} only.
    std::vector<std::size_t> unit_pivots;
    std::size_t top = 0;
    for (std::size_t c = 0; c < n && top < m.size(); ++c) {
        std::size_t sel = m.size();
        for (std::size_t r = top; r < m.size(); ++r)
            if (m[r][c] & 1) {
                sel = r;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[top], m[sel]);
        if (m[top][c] == 3)  // 3 is its own inverse mod 4
            for (std::size_t j = 0; j < n; ++j) m[top][j] = Symbol((3 * m[top][j]) & 3);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != top && m[r][c]) subtract(m[r], m[top], m[r][c]);
        unit_pivots.push_back(c);
        ++top;
    }
    const std::size_t k1 = top;

    // Phase 2: order-2 pivots among the remaining (all-even) rows.  Unit rows
    // are reduced at the new pivot column so the A block ends up binary.
    std::vector<std::size_t> two_pivots;
    for (std::size_t c = 0; c < n && top < m.size(); ++c) {
        std::size_t sel = m.size();
        for (std::size_t r = top; r < m.size(); ++r)
            if (m[r][c] == 2) {
                sel = r;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[top], m[sel]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == top) continue;
            if (m[r][c] >= 2) subtract(m[r], m[top], 1);
        }
        two_pivots.push_back(c);
        ++top;
    }
    const std::size_t k2 = top - k1;

    for (std::size_t r = top; r < m.size(); ++r)
        for (std::size_t j = 0; j < n; ++j)
            if (m[r][j] != 0)
                throw DomainError("standard_form: internal elimination left a nonzero row");

    // Column order: unit pivots, two-pivots, then the free columns.
    std::vector<std::size_t> perm = unit_pivots;
    perm.insert(perm.end(), two_pivots.begin(), two_pivots.end());
    std::vector<bool> used(n, false);
    for (std::size_t c : perm) used[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!used[c]) perm.push_back(c);

    std::vector<Vector> std_rows;
    std_rows.reserve(top);
    for (std::size_t r = 0; r < top; ++r) {
        std::vector<Symbol> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = m[r][perm[j]];
        std_rows.emplace_back(std::move(row));
    }
    return Code(n, k1, k2, std::move(std_rows), std::move(perm));
}

Code dual(const Code& code) {
    const std::size_t n = code.length(), k1 = code.k1(), k2 = code.k2();
    const std::size_t k3 = n - k1 - k2;
    const auto& g = code.standard_rows();

    // Blocks of the standard form: unit row i = (e_i | A_i | B_i),
    // two-row j = (0 | 2 e_j | 2 C_j).
    auto A = [&](std::size_t i, std::size_t j) { return int(g[i][k1 + j]); };
    auto B = [&](std::size_t i, std::size_t j) { return int(g[i][k1 + k2 + j]); };
    auto C = [&](std::size_t i, std::size_t j) { return int(g[k1 + i][k1 + k2 + j]) / 2; };

    std::vector<Vector> rows;
    rows.reserve(k3 + k2);
    // Order-4 dual rows: ( -(B^T + C^T A^T) | C^T | I_k3 ).
    for (std::size_t i = 0; i < k3; ++i) {
        std::vector<Symbol> row(n, 0);
        for (std::size_t j = 0; j < k1; ++j) {
            int v = B(j, i);
            for (std::size_t l = 0; l < k2; ++l) v += C(l, i) * A(j, l);
            row[j] = Symbol(((-v) % 4 + 4) & 3);
        }
        for (std::size_t l = 0; l < k2; ++l) row[k1 + l] = Symbol(C(l, i));
        row[k1 + k2 + i] = 1;
        rows.emplace_back(std::move(row));
    }
    // Order-2 dual rows: ( 2 A^T | 2 I_k2 | 0 ).
    for (std::size_t l = 0; l < k2; ++l) {
        std::vector<Symbol> row(n, 0);
        for (std::size_t j = 0; j < k1; ++j) row[j] = Symbol(2 * A(j, l));
        row[k1 + l] = 2;
        rows.emplace_back(std::move(row));
    }
    if (rows.empty()) {
        // Dual of the full space is the zero code.
        rows.push_back(Vector::zero(n));
    }

    // The rows above live in standard-form coordinates; map them back.
    std::vector<Vector> original;
    original.reserve(rows.size());
    for (const Vector& r : rows) original.push_back(code.to_original(r));
    return standard_form(original);
}

detail::SlicedRows::SlicedRows(const Code& code) {
    n = code.length();
    words = (n + 63) / 64;
    const auto& rows = code.standard_rows();
    lo.assign(rows.size() * words, 0);
    hi.assign(rows.size() * words, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t j = 0; j < n; ++j) {
            const Symbol s = rows[r][j];
            if (s & 1) lo[r * words + j / 64] |= std::uint64_t(1) << (j % 64);
            if (s & 2) hi[r * words + j / 64] |= std::uint64_t(1) << (j % 64);
        }
}

std::uint64_t codeword_count_u64(const Code& code) {
    const std::size_t bits = 2 * code.k1() + code.k2();
    if (bits >= 64) throw CapacityError("codeword count does not fit 64 bits");
    return std::uint64_t(1) << bits;
}

Vector codeword_at(const Code& code, std::uint64_t index) {
    const std::size_t n = code.length(), k1 = code.k1(), k2 = code.k2();
    if (index >= codeword_count_u64(code)) throw DomainError("codeword index out of range");
    std::vector<Symbol> acc(n, 0);
    const auto& rows = code.standard_rows();
    std::uint64_t rem = index;
    for (std::size_t i = k1 + k2; i-- > 0;) {
        const unsigned radix = i < k1 ? 4u : 2u;
        const unsigned d = unsigned(rem % radix);
        rem /= radix;
        if (d)
            for (std::size_t j = 0; j < n; ++j) acc[j] = Symbol((acc[j] + d * rows[i][j]) & 3);
    }
    return code.to_original(Vector(std::move(acc)));
}

std::vector<Vector> codewords(const Code& code) {
    const std::uint64_t total = codeword_count_u64(code);
    if (total > (std::uint64_t(1) << 26))
        throw CapacityError("refusing to materialize more than 2^26 codewords");
    std::vector<Vector> out;
    out.reserve(total);
    for_each_codeword(code, 0, total, [&](const Vector& v) { out.push_back(v); });
    return out;
}

int min_lee_distance(const Code& code, std::uint64_t budget) {
    if (code.k1() == 0 && code.k2() == 0)
        throw DomainError("min_lee_distance: the zero code has no nonzero codeword");
    const std::uint64_t total = codeword_count_u64(code);
    if (total > budget) throw CapacityError("min_lee_distance: enumeration budget exceeded");
    int best = int(2 * code.length()) + 1;
    // Index 0 is the zero word (message 0); every other index is nonzero.
    std::uint64_t idx = 0;
    for_each_codeword_counts(code, 0, total, [&](int n13, int n2) {
        if (idx++ == 0) return;
        const int w = n13 + 2 * n2;
        if (w < best) best = w;
    });
    return best;
}

}  // namespace fulat::z4
