#include "fulat/theta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace fulat::theta {

namespace {

constexpr double kNextTermCutoff = 1e-17;
constexpr int kMaxTerms = 10000;
constexpr double kMinTau = 1e-3;

void check_tau(double tau) {
    if (!(tau > 0)) throw DomainError("theta: tau must be positive");
    if (tau < kMinTau) throw DomainError("theta: tau below 1e-3 is refused (series too slow)");
}

// Defining series at q = e^{-pi tau}, truncated once the next term falls
// below 1e-17 of the partial sum.  Only called with tau >= 1, where q <= 0.044
// and the alternating theta4 series has no damaging cancellation.
double direct_series(int kind, double tau) {
    const double q = std::exp(-std::numbers::pi * tau);
    const double q2 = q * q;
    switch (kind) {
        case 2: {
            // 2 q^{1/4} sum_{m>=0} q^{m(m+1)}; successive term ratio q^{2(m+1)}.
            double term = 2.0 * std::exp(-std::numbers::pi * tau / 4.0);
            double ratio = q2;
            double sum = 0.0;
            for (int m = 0; m < kMaxTerms; ++m) {
                sum += term;
                term *= ratio;
                ratio *= q2;
                if (term <= kNextTermCutoff * sum) return sum;
            }
            break;
        }
        case 3:
        case 4: {
            // 1 + 2 sum_{m>=1} (+-1)^m q^{m^2}; q^{m^2} grows by q^{2m-1}.
            const double sign = kind == 3 ? 1.0 : -1.0;
            double sum = 1.0;
            double power = 1.0;  // q^{m^2}
            double ratio = q;    // q^{2m+1} after the update below
            double s = sign;
            for (int m = 1; m < kMaxTerms; ++m) {
                power *= ratio;
                ratio *= q2;
                sum += 2.0 * s * power;
                s *= sign;
                if (2.0 * power * ratio <= kNextTermCutoff * sum) return sum;
            }
            break;
        }
        default:
            throw DomainError("jacobi_theta: kind must be 2, 3 or 4");
    }
    throw CapacityError("jacobi_theta: series did not converge within 10000 terms");
}

}  // namespace

double jacobi_theta(int kind, double tau) {
    check_tau(tau);
    if (kind != 2 && kind != 3 && kind != 4)
        throw DomainError("jacobi_theta: kind must be 2, 3 or 4");
    if (tau >= 1.0) return direct_series(kind, tau);
    // For tau < 1 the raw series loses relative accuracy (theta4 cancels to
    // near zero), so evaluate through the imaginary-argument transformation
    //   theta3(tau) = theta3(1/tau)/sqrt(tau),
    //   theta2(tau) = theta4(1/tau)/sqrt(tau),
    //   theta4(tau) = theta2(1/tau)/sqrt(tau),
    // where the series at 1/tau > 1 is benign.
    const int mapped = kind == 3 ? 3 : (kind == 2 ? 4 : 2);
    return direct_series(mapped, 1.0 / tau) / std::sqrt(tau);
}

double theta_a4(const SwePolynomial& p, double tau) {
    check_tau(tau);
    const std::array<double, 3> point = {jacobi_theta(3, 4 * tau), jacobi_theta(2, tau) / 2.0,
                                         jacobi_theta(2, 4 * tau)};
    return p.evaluate(std::span<const double, 3>(point));
}

double theta_construction_c(const JwePolynomial& j, double tau) {
    check_tau(tau);
    const double half_t2 = jacobi_theta(2, tau) / 2.0;
    const std::array<double, 4> point = {jacobi_theta(3, 4 * tau), jacobi_theta(2, 4 * tau),
                                         half_t2, half_t2};
    return j.evaluate(std::span<const double, 4>(point));
}

double theta_zn(double nu, int n, double tau) {
    if (!(nu > 0)) throw DomainError("theta_zn: nu must be positive");
    if (n < 1) throw DomainError("theta_zn: dimension must be >= 1");
    check_tau(tau);
    return std::pow(jacobi_theta(3, nu * nu * tau), n);
}

void QExpansion::add(std::int64_t norm4, std::uint64_t count) {
    if (norm4 < 0) throw DomainError("q-expansion: negative squared norm");
    if (count == 0) return;
    counts_[norm4] += count;
}

double QExpansion::evaluate(double tau) const {
    double sum = 0.0;
    for (const auto& [norm4, count] : counts_)
        sum += double(count) * std::exp(-std::numbers::pi * tau * double(norm4) / 4.0);
    return sum;
}

QExpansion q_expansion_a4(const z4::Code& code, std::int64_t max_norm4) {
    const std::size_t n = code.length();
    if (max_norm4 <= 0) throw DomainError("q_expansion_a4: maxNorm must be positive");
    if (n > 12 || max_norm4 > 64)
        throw CapacityError("q_expansion_a4: direct enumeration limited to n <= 12, maxNorm <= 16");

    std::vector<std::uint64_t> counts(std::size_t(max_norm4) + 1, 0);
    // Cheapest per-coordinate contribution 4*v^2 for each symbol: 0, 1, 4, 1.
    static constexpr std::int64_t kMin4[4] = {0, 1, 4, 1};

    std::vector<std::int64_t> suffix_min(n + 1, 0);
    const std::uint64_t total = z4::codeword_count_u64(code);
    z4::for_each_codeword(code, 0, total, [&](const z4::Vector& c) {
        for (std::size_t i = n; i-- > 0;) suffix_min[i] = suffix_min[i + 1] + kMin4[c[i]];
        if (suffix_min[0] > max_norm4) return;
        // DFS over integer offsets; x_i = (c_i + 4m)/2 contributes (c_i + 4m)^2.
        auto rec = [&](auto&& self, std::size_t i, std::int64_t acc) -> void {
            if (i == n) {
                ++counts[std::size_t(acc)];
                return;
            }
            const std::int64_t room = max_norm4 - acc - suffix_min[i + 1];
            const int s = int(c[i]);
            for (int m = -3; m <= 3; ++m) {
                const std::int64_t v = std::int64_t(s + 4 * m) * (s + 4 * m);
                if (v <= room) self(self, i + 1, acc + v);
            }
        };
        rec(rec, 0, 0);
    });

    QExpansion out(int(n), max_norm4);
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k]) out.add(std::int64_t(k), counts[k]);
    return out;
}

QExpansion q_expansion_from_swe(const SwePolynomial& p, std::int64_t max_norm4) {
    if (max_norm4 <= 0) throw DomainError("q_expansion_from_swe: maxNorm must be positive");
    if (max_norm4 > (std::int64_t(1) << 20))
        throw CapacityError("q_expansion_from_swe: maxNorm too large");
    const std::size_t len = std::size_t(max_norm4) + 1;

    // Per-symbol coordinate series, truncated at max_norm4:
    //   symbol 0:      values 2m,      4*v^2 = 16 m^2     (theta3(4z) series)
    //   symbol 1 or 3: values m + 1/2 offsets, 4*v^2 = (4m+1)^2  (theta2(z)/2)
    //   symbol 2:      values 2m + 1,  4*v^2 = (4m+2)^2   (theta2(4z) series)
    std::array<std::vector<Int>, 3> series;
    for (auto& s : series) s.assign(len, 0);
    const int mmax = int(std::sqrt(double(max_norm4))) / 2 + 2;
    for (int m = -mmax; m <= mmax; ++m) {
        const std::int64_t v0 = std::int64_t(16) * m * m;
        const std::int64_t v1 = std::int64_t(4 * m + 1) * (4 * m + 1);
        const std::int64_t v2 = std::int64_t(4 * m + 2) * (4 * m + 2);
        if (v0 <= max_norm4) series[0][std::size_t(v0)] += 1;
        if (v1 <= max_norm4) series[1][std::size_t(v1)] += 1;
        if (v2 <= max_norm4) series[2][std::size_t(v2)] += 1;
    }

    auto convolve = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> out(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j + i < len; ++j)
                if (b[j] != 0) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
        }
        return out;
    };

    std::vector<Int> acc(len, 0);
    for (const auto& [e, coeff] : p.terms()) {
        std::vector<Int> prod(len, 0);
        prod[0] = 1;
        for (std::size_t v = 0; v < 3; ++v)
            for (int rep = 0; rep < e[v]; ++rep) prod = convolve(prod, series[v]);
        for (std::size_t k = 0; k < len; ++k)
            if (prod[k] != 0) acc[k] = checked_add(acc[k], checked_mul(coeff, prod[k]));
    }

    QExpansion out(p.degree(), max_norm4);
    for (std::size_t k = 0; k < len; ++k) {
        if (acc[k] == 0) continue;
        if (acc[k] < 0 || acc[k] > Int(UINT64_MAX))
            throw CapacityError("q_expansion_from_swe: count out of range");
        out.add(std::int64_t(k), std::uint64_t(acc[k]));
    }
    return out;
}

double jacobi_transform_residual(const SwePolynomial& p, const SwePolynomial& p_dual,
                                 double vol_dual, double tau) {
    check_tau(tau);
    const int n = p.degree();
    const double lhs = theta_a4(p, tau);
    const double rhs = vol_dual * std::pow(tau, -0.5 * n) * theta_a4(p_dual, 1.0 / tau);
    return lhs - rhs;
}

}  // namespace fulat::theta
