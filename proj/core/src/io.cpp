#include "fulat/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace fulat::io {

namespace {

std::string next_token(std::istream& in, const char* what) {
    std::string tok;
    if (!(in >> tok)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return tok;
}

long long next_int(std::istream& in, const char* what) {
    const std::string tok = next_token(in, what);
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
}

void expect_header(std::istream& in, const char* tag) {
    const std::string tok = next_token(in, tag);
    if (tok != tag)
        throw ParseError(std::string("expected '") + tag + "' header, got '" + tok + "'");
}

}  // namespace

std::string peek_format(std::istream& in) { return next_token(in, "a format header"); }

z4::Code read_z4_code(std::istream& in) {
    expect_header(in, "Z4");
    const long long n = next_int(in, "length n");
    const long long k1 = next_int(in, "k1");
    const long long k2 = next_int(in, "k2");
    if (n < 1 || k1 < 0 || k2 < 0 || k1 + k2 > n)
        throw ParseError("Z4 header out of range (need 1 <= n, 0 <= k1+k2 <= n)");
    std::vector<z4::Vector> rows;
    for (long long r = 0; r < k1 + k2; ++r) {
        std::vector<z4::Symbol> s(std::size_t(n));
        for (long long j = 0; j < n; ++j) {
            const long long v = next_int(in, "a Z4 digit");
            if (v < 0 || v > 3) throw ParseError("Z4 digit out of range {0,1,2,3}");
            s[std::size_t(j)] = z4::Symbol(v);
        }
        rows.emplace_back(std::move(s));
    }
    if (rows.empty()) rows.push_back(z4::Vector::zero(std::size_t(n)));
    return z4::standard_form(rows);
}

void write_z4_code(std::ostream& out, const z4::Code& code) {
    out << "Z4 " << code.length() << ' ' << code.k1() << ' ' << code.k2() << '\n';
    for (const z4::Vector& r : code.generator_rows()) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << int(r[j]);
        out << '\n';
    }
}

f2::Code read_f2_code(std::istream& in) {
    expect_header(in, "F2");
    const long long n = next_int(in, "length n");
    const long long k = next_int(in, "dimension k");
    if (n < 1 || k < 0 || k > n) throw ParseError("F2 header out of range (need 0 <= k <= n)");
    std::vector<f2::Vector> rows;
    for (long long r = 0; r < k; ++r) {
        f2::Vector v(std::size_t(n));
        for (long long j = 0; j < n; ++j) {
            const long long b = next_int(in, "a bit");
            if (b < 0 || b > 1) throw ParseError("binary digit out of range {0,1}");
            if (b) v.set_bit(std::size_t(j), true);
        }
        rows.push_back(std::move(v));
    }
    return f2::Code(std::size_t(n), std::move(rows));
}

void write_f2_code(std::ostream& out, const f2::Code& code) {
    out << "F2 " << code.length() << ' ' << code.dimension() << '\n';
    for (const f2::Vector& r : code.rows()) {
        for (std::size_t j = 0; j < code.length(); ++j) out << (j ? " " : "") << (r.bit(j) ? 1 : 0);
        out << '\n';
    }
}

namespace {

template <std::size_t D>
HomogeneousPoly<D> read_poly(std::istream& in, const char* tag) {
    expect_header(in, tag);
    const long long n = next_int(in, "degree n");
    if (n < 0) throw ParseError("polynomial degree must be nonnegative");
    const std::string mass_tok = next_token(in, "mass");
    const Int mass = int_from_string(mass_tok);
    HomogeneousPoly<D> p(int(n));
    // Term lines until end of stream.
    std::string tok;
    while (in >> tok) {
        const Int coeff = int_from_string(tok);
        typename HomogeneousPoly<D>::Exponents e;
        for (std::size_t v = 0; v < D; ++v) {
            const long long x = next_int(in, "an exponent");
            if (x < 0 || x > n) throw ParseError("exponent out of range");
            e[v] = int(x);
        }
        try {
            p.add_term(e, coeff);
        } catch (const DomainError& ex) {
            throw ParseError(std::string("bad term: ") + ex.what());
        }
    }
    if (p.mass() != mass) throw ParseError("declared mass does not match the sum of coefficients");
    return p;
}

template <std::size_t D>
void write_poly(std::ostream& out, const HomogeneousPoly<D>& p, const char* tag) {
    out << tag << ' ' << p.degree() << ' ' << int_to_string(p.mass()) << '\n';
    for (const auto& [e, c] : p.terms()) {
        out << int_to_string(c);
        for (std::size_t v = 0; v < D; ++v) out << ' ' << e[v];
        out << '\n';
    }
}

}  // namespace

SwePolynomial read_swe(std::istream& in) { return read_poly<3>(in, "SWE"); }
void write_swe(std::ostream& out, const SwePolynomial& p) { write_poly<3>(out, p, "SWE"); }

WePolynomial read_we(std::istream& in) { return read_poly<2>(in, "WE"); }
void write_we(std::ostream& out, const WePolynomial& p) { write_poly<2>(out, p, "WE"); }

JwePolynomial read_jwe(std::istream& in) { return read_poly<4>(in, "JWE"); }
void write_jwe(std::ostream& out, const JwePolynomial& p) { write_poly<4>(out, p, "JWE"); }

theta::QExpansion read_qexp(std::istream& in) {
    expect_header(in, "QEXP");
    const long long n = next_int(in, "dimension n");
    const long long max4 = next_int(in, "maxNorm4");
    if (n < 1 || max4 < 1) throw ParseError("QEXP header out of range");
    theta::QExpansion q(int(n), max4);
    std::string tok;
    while (in >> tok) {
        long long norm4 = 0;
        try {
            norm4 = std::stoll(tok);
        } catch (const std::exception&) {
            throw ParseError("expected a norm numerator, got '" + tok + "'");
        }
        const long long count = next_int(in, "a point count");
        if (norm4 < 0 || norm4 > max4 || count < 0) throw ParseError("QEXP line out of range");
        q.add(norm4, std::uint64_t(count));
    }
    return q;
}

void write_qexp(std::ostream& out, const theta::QExpansion& q) {
    out << "QEXP " << q.dimension() << ' ' << q.max_norm4() << '\n';
    for (const auto& [norm4, count] : q.counts()) out << norm4 << ' ' << count << '\n';
}

void write_lattice(std::ostream& out, const LatticeDescriptor& lat) {
    out << "LATTICE " << lat.n << ' ' << lat.volume.str() << '\n';
    for (const auto& row : lat.basis) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].str();
        out << '\n';
    }
}

}  // namespace fulat::io
