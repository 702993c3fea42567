#include "fulat/enumerators.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace fulat {

template <std::size_t D>
double HomogeneousPoly<D>::evaluate(std::span<const double, D> point) const {
    // Power tables up to the degree keep this O(terms * D).
    std::array<std::vector<double>, D> pow;
    for (std::size_t v = 0; v < D; ++v) {
        pow[v].resize(std::size_t(degree_) + 1);
        pow[v][0] = 1.0;
        for (int e = 1; e <= degree_; ++e) pow[v][e] = pow[v][e - 1] * point[v];
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = double(c);
        for (std::size_t v = 0; v < D; ++v) t *= pow[v][std::size_t(e[v])];
        sum += t;
    }
    return sum;
}

template double HomogeneousPoly<2>::evaluate(std::span<const double, 2>) const;
template double HomogeneousPoly<3>::evaluate(std::span<const double, 3>) const;
template double HomogeneousPoly<4>::evaluate(std::span<const double, 4>) const;

namespace {

// Product of two exact sparse homogeneous polynomials.
template <std::size_t D>
HomogeneousPoly<D> multiply(const HomogeneousPoly<D>& a, const HomogeneousPoly<D>& b) {
    HomogeneousPoly<D> out(a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            typename HomogeneousPoly<D>::Exponents e;
            for (std::size_t v = 0; v < D; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, checked_mul(ca, cb));
        }
    return out;
}

// Kernel substitution p(x) -> p(K x) where each new variable is the integer
// linear form K[v], expanded by exact convolution.  Powers of each form are
// cached across terms.
template <std::size_t D>
HomogeneousPoly<D> substitute_linear(const HomogeneousPoly<D>& p,
                                     const std::array<std::array<int, D>, D>& kernel) {
    std::array<std::vector<HomogeneousPoly<D>>, D> powers;
    for (std::size_t v = 0; v < D; ++v) {
        HomogeneousPoly<D> one(0);
        typename HomogeneousPoly<D>::Exponents zero{};
        one.add_term(zero, 1);
        powers[v].push_back(std::move(one));
        HomogeneousPoly<D> form(1);
        for (std::size_t w = 0; w < D; ++w) {
            typename HomogeneousPoly<D>::Exponents e{};
            e[w] = 1;
            form.add_term(e, kernel[v][w]);
        }
        powers[v].push_back(std::move(form));
    }
    auto power = [&](std::size_t v, int e) -> const HomogeneousPoly<D>& {
        while (int(powers[v].size()) <= e)
            powers[v].push_back(multiply(powers[v].back(), powers[v][1]));
        return powers[v][std::size_t(e)];
    };

    HomogeneousPoly<D> out(p.degree());
    for (const auto& [e, c] : p.terms()) {
        HomogeneousPoly<D> prod(0);
        typename HomogeneousPoly<D>::Exponents zero{};
        prod.add_term(zero, c);
        for (std::size_t v = 0; v < D; ++v)
            if (e[v] > 0) prod = multiply(prod, power(v, e[v]));
        for (const auto& [pe, pc] : prod.terms()) out.add_term(pe, pc);
    }
    return out;
}

// Divide every coefficient by `divisor`, which must be exact.
template <std::size_t D>
HomogeneousPoly<D> divide_exact(const HomogeneousPoly<D>& p, Int divisor) {
    if (divisor <= 0) throw DomainError("enumerator transform: divisor must be positive");
    HomogeneousPoly<D> out(p.degree());
    for (const auto& [e, c] : p.terms()) {
        if (c % divisor != 0)
            throw DomainError(
                "enumerator transform produced a non-integer coefficient "
                "(inconsistent input polynomial)");
        out.add_term(e, c / divisor);
    }
    return out;
}

}  // namespace

SwePolynomial swe_from_code(const z4::Code& code, const EnumerationOptions& opts) {
    const std::size_t bits = 2 * code.k1() + code.k2();
    if (bits >= 64 || (std::uint64_t(1) << bits) > opts.budget)
        throw CapacityError("swe_from_code: codeword count exceeds the enumeration budget");
    const std::uint64_t total = std::uint64_t(1) << bits;
    const std::size_t n = code.length();

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (std::uint64_t(threads) > total) threads = unsigned(total);

    // One (n13, n2) grid per worker, merged additively at the end.
    const std::size_t grid = (n + 1) * (n + 1);
    std::vector<std::vector<std::uint64_t>> counts(threads,
                                                   std::vector<std::uint64_t>(grid, 0));
    auto work = [&](unsigned t) {
        const std::uint64_t begin = total / threads * t + std::min<std::uint64_t>(t, total % threads);
        const std::uint64_t end =
            total / threads * (t + 1) + std::min<std::uint64_t>(t + 1, total % threads);
        auto& local = counts[t];
        z4::for_each_codeword_counts(code, begin, end, [&](int n13, int n2) {
            ++local[std::size_t(n13) * (n + 1) + std::size_t(n2)];
        });
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    SwePolynomial out(int(n));
    for (std::size_t n13 = 0; n13 <= n; ++n13)
        for (std::size_t n2 = 0; n2 + n13 <= n; ++n2) {
            std::uint64_t c = 0;
            for (unsigned t = 0; t < threads; ++t) c += counts[t][n13 * (n + 1) + n2];
            if (c)
                out.add_term({int(n - n13 - n2), int(n13), int(n2)}, Int(c));
        }
    return out;
}

SwePolynomial macwilliams_swe(const SwePolynomial& p, Int dual_cardinality) {
    const Int mass = p.mass();
    if (mass <= 0) throw DomainError("macwilliams_swe: empty polynomial");
    const Int full = int_pow2(2 * p.degree());  // 4^n
    if (checked_mul(mass, dual_cardinality) != full)
        throw DomainError("macwilliams_swe: dual cardinality inconsistent with mass (need 4^n)");
    static constexpr std::array<std::array<int, 3>, 3> kernel = {{
        {1, 2, 1},   // a + 2b + c
        {1, 0, -1},  // a     -  c
        {1, -2, 1},  // a - 2b + c
    }};
    return divide_exact(substitute_linear(p, kernel), mass);
}

bool is_formally_self_dual(const SwePolynomial& p) {
    if (p.mass() != int_pow2(p.degree())) return false;  // |C| must be 4^{n/2}
    return macwilliams_swe(p, p.mass()) == p;
}

SwePolynomial swe_from_jwe(const JwePolynomial& j) {
    SwePolynomial out(j.degree());
    for (const auto& [e, c] : j.terms())
        out.add_term({e[0], e[2] + e[3], e[1]}, c);
    return out;
}

JwePolynomial macwilliams_jwe(const JwePolynomial& j, Int c1_dual_cardinality,
                              Int c2_dual_cardinality) {
    const Int mass = j.mass();
    if (mass <= 0) throw DomainError("macwilliams_jwe: empty polynomial");
    const Int full = int_pow2(2 * j.degree());  // 2^n * 2^n
    if (checked_mul(mass, checked_mul(c1_dual_cardinality, c2_dual_cardinality)) != full)
        throw DomainError("macwilliams_jwe: dual cardinalities inconsistent with mass");
    static constexpr std::array<std::array<int, 4>, 4> kernel = {{
        {1, 1, 1, 1},
        {1, 1, -1, -1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
    }};
    return divide_exact(substitute_linear(j, kernel), mass);
}

WePolynomial binary_macwilliams(const WePolynomial& p, Int dual_cardinality) {
    const Int mass = p.mass();
    if (mass <= 0) throw DomainError("binary_macwilliams: empty polynomial");
    const Int full = int_pow2(p.degree());  // 2^n
    if (checked_mul(mass, dual_cardinality) != full)
        throw DomainError("binary_macwilliams: dual cardinality inconsistent with mass (need 2^n)");
    static constexpr std::array<std::array<int, 2>, 2> kernel = {{
        {1, 1},
        {1, -1},
    }};
    return divide_exact(substitute_linear(p, kernel), mass);
}

}  // namespace fulat
