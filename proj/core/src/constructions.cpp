#include "fulat/constructions.hpp"

#include <algorithm>
#include <string>

namespace fulat {

std::vector<std::vector<std::int64_t>> hermite_normal_form(
    std::vector<std::vector<std::int64_t>> rows) {
    if (rows.empty()) throw DomainError("hermite_normal_form: empty matrix");
    const std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw DomainError("hermite_normal_form: ragged rows");

    std::vector<std::vector<std::int64_t>> h(n);
    std::size_t active = rows.size();

    // Assign pivot rows from the last column backwards; row c of the result
    // ends at column c, which yields the lower-triangular shape.
    for (std::size_t c = n; c-- > 0;) {
        // Euclid over the column-c entries of the active rows.
        for (;;) {
            std::size_t nz = active;
            int count = 0;
            for (std::size_t r = 0; r < active; ++r)
                if (rows[r][c] != 0) {
                    ++count;
                    if (nz == active || std::llabs(rows[r][c]) < std::llabs(rows[nz][c])) nz = r;
                }
            if (count == 0) throw DomainError("hermite_normal_form: rows do not span full rank");
            if (count == 1) {
                std::swap(rows[nz], rows[active - 1]);
                break;
            }
            // Reduce every other nonzero entry by the smallest one.
            for (std::size_t r = 0; r < active; ++r) {
                if (r == nz || rows[r][c] == 0) continue;
                const std::int64_t q = rows[r][c] / rows[nz][c];
                if (q != 0)
                    for (std::size_t j = 0; j <= c; ++j) rows[r][j] -= q * rows[nz][j];
                // Odd remainders with opposite sign can survive; one extra
                // subtraction makes |entry| strictly smaller than |pivot|.
                if (rows[r][c] != 0 && std::llabs(rows[r][c]) >= std::llabs(rows[nz][c])) {
                    const std::int64_t s = (rows[r][c] > 0) == (rows[nz][c] > 0) ? 1 : -1;
                    for (std::size_t j = 0; j <= c; ++j) rows[r][j] -= s * rows[nz][j];
                }
            }
        }
        --active;
        h[c] = std::move(rows[active]);
        if (h[c][c] < 0)
            for (auto& x : h[c]) x = -x;
        for (std::size_t j = c + 1; j < n; ++j)
            if (h[c][j] != 0) throw DomainError("hermite_normal_form: internal shape violation");
    }

    // Canonical reduction below the diagonal: 0 <= h[j][i] < h[i][i].
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = j; i-- > 0;) {
            std::int64_t q = h[j][i] / h[i][i];
            if (h[j][i] - q * h[i][i] < 0) --q;
            if (q != 0)
                for (std::size_t l = 0; l <= i; ++l) h[j][l] -= q * h[i][l];
        }
    return h;
}

LatticeDescriptor construction_a4(const z4::Code& code) {
    const std::size_t n = code.length();
    // 2L = C + 4Z^n as an integer lattice: generator rows of C plus 4 e_i.
    std::vector<std::vector<std::int64_t>> rows;
    for (const z4::Vector& g : code.generator_rows()) {
        std::vector<std::int64_t> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = g[j];
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> r(n, 0);
        r[i] = 4;
        rows.push_back(std::move(r));
    }
    const auto h = hermite_normal_form(std::move(rows));

    LatticeDescriptor out{.n = int(n), .volume = Rational(1), .basis = {}, .source = code};
    out.basis.resize(n, std::vector<Rational>(n));
    // 2L has determinant prod diag; L = (2L)/2 has volume prod diag / 2^n.
    Rational vol(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.basis[i][j] = Rational(h[i][j], 2);
        vol = Rational(vol.num * h[i][i], vol.den * 2);
    }
    out.volume = vol;
    return out;
}

namespace {

std::string violation_message(const f2::Code& c1, const f2::SchurViolation& v) {
    if (v.i == v.j)
        return "lift: basis row " + std::to_string(v.i) + " of C1 is not contained in C2";
    return "lift: the element-wise product of C1 basis rows " + std::to_string(v.i) + " and " +
           std::to_string(v.j) + " is not contained in C2 (chain not Schur-closed)";
}

}  // namespace

z4::Code lift_c1_2c2(const f2::Code& c1, const f2::Code& c2) {
    if (c1.length() != c2.length()) throw DomainError("lift: codes must have equal length");
    if (auto v = f2::schur_violation(c1, c2)) throw DomainError(violation_message(c1, *v));
    const std::size_t n = c1.length();

    // Basis completion of C2 over C1, deterministic by row order: reduce each
    // C2 generator against C1's basis and the completions picked so far.
    std::vector<f2::Vector> completion_basis;  // reduced representatives
    {
        std::vector<f2::Vector> reducer;  // incremental echelon of C1 + completion
        std::vector<std::size_t> pivots;
        auto reduce = [&](f2::Vector v) {
            for (std::size_t i = 0; i < reducer.size(); ++i)
                if (v.bit(pivots[i])) v.xor_in(reducer[i]);
            return v;
        };
        auto insert = [&](const f2::Vector& v) {
            std::size_t p = 0;
            while (!v.bit(p)) ++p;
            reducer.push_back(v);
            pivots.push_back(p);
        };
        for (const f2::Vector& r : c1.rows()) insert(reduce(r));
        for (const f2::Vector& g : c2.rows()) {
            f2::Vector r = reduce(g);
            if (!r.is_zero()) {
                completion_basis.push_back(r);
                insert(r);
            }
        }
    }

    std::vector<z4::Vector> rows;
    rows.reserve(c1.dimension() + completion_basis.size());
    for (const f2::Vector& r : c1.rows()) {
        std::vector<z4::Symbol> s(n);
        for (std::size_t j = 0; j < n; ++j) s[j] = r.bit(j) ? 1 : 0;
        rows.emplace_back(std::move(s));
    }
    for (const f2::Vector& r : completion_basis) {
        std::vector<z4::Symbol> s(n);
        for (std::size_t j = 0; j < n; ++j) s[j] = r.bit(j) ? 2 : 0;
        rows.emplace_back(std::move(s));
    }
    if (rows.empty()) rows.push_back(z4::Vector::zero(n));  // zero/zero pair
    return z4::standard_form(rows);
}

z4::Code dual_of_lift(const f2::Code& c1, const f2::Code& c2) {
    if (c1.length() != c2.length()) throw DomainError("lift: codes must have equal length");
    if (auto v = f2::schur_violation(c1, c2)) throw DomainError(violation_message(c1, *v));
    return lift_c1_2c2(f2::dual(c2), f2::dual(c1));
}

bool theorem3_check(const f2::Code& c1, const f2::Code& c2) {
    if (c1.length() != c2.length()) throw DomainError("lift: codes must have equal length");
    if (auto v = f2::schur_violation(c1, c2)) throw DomainError(violation_message(c1, *v));
    return f2::weight_enumerator(c1) == f2::weight_enumerator(f2::dual(c2)) &&
           f2::weight_enumerator(c2) == f2::weight_enumerator(f2::dual(c1));
}

z4::Code rm_unimodular(int m) {
    if (m < 3) throw DomainError("rm_unimodular: m must be >= 3");
    return lift_c1_2c2(f2::reed_muller(1, m), f2::reed_muller(m - 2, m));
}

PackingDescriptor construction_c_packing(const f2::Code& c1, const f2::Code& c2) {
    if (c1.length() != c2.length())
        throw DomainError("construction_c_packing: codes must have equal length");
    for (std::size_t i = 0; i < c1.rows().size(); ++i)
        if (!c2.contains(c1.rows()[i]))
            throw DomainError("construction_c_packing: C1 basis row " + std::to_string(i) +
                              " is not contained in C2");
    const std::size_t kk = c1.dimension() + c2.dimension();
    if (kk >= 64) throw CapacityError("construction_c_packing: coset count does not fit 64 bits");
    return PackingDescriptor{.n = int(c1.length()),
                             .coset_count = std::uint64_t(1) << kk,
                             .c1 = c1,
                             .c2 = c2,
                             .is_lattice = f2::schur_closed(c1, c2)};
}

}  // namespace fulat
