#include "fulat/catalog.hpp"

#include <array>

namespace fulat::catalog {

std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::z4_generator: return "z4-generator";
        case Kind::binary_pair: return "binary-pair";
        case Kind::swe_only: return "swe-only";
    }
    return "?";
}

namespace {

z4::Code octacode() {
    // (I4 | B) generator of the self-dual octacode O8.
    static constexpr std::array<std::array<int, 8>, 4> g = {{
        {1, 0, 0, 0, 3, 1, 2, 1},
        {0, 1, 0, 0, 1, 2, 3, 1},
        {0, 0, 1, 0, 3, 3, 3, 2},
        {0, 0, 0, 1, 2, 3, 1, 1},
    }};
    std::vector<z4::Vector> rows;
    for (const auto& r : g) {
        std::vector<z4::Symbol> s(r.begin(), r.end());
        rows.emplace_back(std::move(s));
    }
    return z4::standard_form(rows);
}

SwePolynomial c8_swe() {
    // Betsumiya-Harada formally self-dual code of length 8, stored as its
    // published swe; the mass is validated below.
    SwePolynomial p(8);
    p.add_term({0, 0, 8}, 1);
    p.add_term({0, 8, 0}, 64);
    p.add_term({1, 2, 5}, 12);
    p.add_term({1, 6, 1}, 64);
    p.add_term({2, 0, 6}, 16);
    p.add_term({3, 2, 3}, 40);
    p.add_term({4, 0, 4}, 30);
    p.add_term({5, 2, 1}, 12);
    p.add_term({6, 0, 2}, 16);
    p.add_term({8, 0, 0}, 1);
    if (p.mass() != 256)
        throw DomainError("catalog: C8 swe mass is not 256; entry data corrupted");
    return p;
}

std::pair<f2::Code, f2::Code> c12_pair() {
    static constexpr std::array<std::array<std::uint8_t, 12>, 2> g1 = {{
        {1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1},
        {0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1},
    }};
    static constexpr std::array<std::array<std::uint8_t, 12>, 10> g2 = {{
        {1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1},
        {0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
        {0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0},
        {0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1},
        {0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1},
        {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 1, 1},
    }};
    std::vector<f2::Vector> r1, r2;
    for (const auto& r : g1) r1.push_back(f2::Vector::from_bits(r));
    for (const auto& r : g2) r2.push_back(f2::Vector::from_bits(r));
    return {f2::Code(12, std::move(r1)), f2::Code(12, std::move(r2))};
}

std::vector<Entry> build() {
    std::vector<Entry> entries;

    entries.push_back(Entry{.name = "O8",
                            .kind = Kind::z4_generator,
                            .z4_code = octacode(),
                            .binary_pair = std::nullopt,
                            .swe = std::nullopt,
                            .expected_gain = 1.333,
                            .provenance = "octacode, self-dual [8,2^8,6] code over Z4 "
                                          "(Conway-Sloane; Wan, Ex. 14.3)"});

    entries.push_back(Entry{.name = "C8",
                            .kind = Kind::swe_only,
                            .z4_code = std::nullopt,
                            .binary_pair = std::nullopt,
                            .swe = c8_swe(),
                            .expected_gain = 1.282,
                            .provenance = "formally self-dual length-8 code over Z4 "
                                          "(Betsumiya-Harada, pp. 83-84); swe only"});

    entries.push_back(Entry{.name = "C12",
                            .kind = Kind::binary_pair,
                            .z4_code = std::nullopt,
                            .binary_pair = c12_pair(),
                            .swe = std::nullopt,
                            .expected_gain = 1.6,
                            .provenance = "formally self-dual [12,2^12,4] lift C1+2C2 of a "
                                          "nested [12,2]/[12,10] binary pair"});

    entries.push_back(Entry{.name = "RM16",
                            .kind = Kind::binary_pair,
                            .z4_code = std::nullopt,
                            .binary_pair = std::make_pair(f2::reed_muller(1, 4),
                                                          f2::reed_muller(2, 4)),
                            .swe = std::nullopt,
                            .expected_gain = 1.778,
                            .provenance = "R(1,4)+2R(2,4), self-dual [16,2^16,8] "
                                          "Reed-Muller lift (Wan, Ex. 12.8)"});

    entries.push_back(Entry{.name = "RM32",
                            .kind = Kind::binary_pair,
                            .z4_code = std::nullopt,
                            .binary_pair = std::make_pair(f2::reed_muller(1, 5),
                                                          f2::reed_muller(3, 5)),
                            .swe = std::nullopt,
                            .expected_gain = 7.11,
                            .provenance = "R(1,5)+2R(3,5), self-dual [32,2^32] "
                                          "Reed-Muller lift (Wan, Ex. 12.8)"});

    return entries;
}

}  // namespace

const std::vector<Entry>& list() {
    static const std::vector<Entry> entries = build();
    return entries;
}

const Entry& get(std::string_view name) {
    for (const Entry& e : list())
        if (e.name == name) return e;
    std::string msg = "unknown catalog entry '";
    msg += name;
    msg += "'; available:";
    for (const Entry& e : list()) {
        msg += ' ';
        msg += e.name;
    }
    throw DomainError(msg);
}

}  // namespace fulat::catalog
