#ifndef FULAT_CATALOG_HPP
#define FULAT_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fulat/enumerators.hpp"
#include "fulat/f2.hpp"
#include "fulat/z4.hpp"

namespace fulat::catalog {

enum class Kind { z4_generator, binary_pair, swe_only };

std::string_view kind_name(Kind k);

struct Entry {
    std::string name;
    Kind kind;
    std::optional<z4::Code> z4_code;                        // z4_generator
    std::optional<std::pair<f2::Code, f2::Code>> binary_pair;  // binary_pair (C1, C2)
    std::optional<SwePolynomial> swe;                       // swe_only
    std::optional<double> expected_gain;  // only when a published value exists
    std::string provenance;
};

// Built-in entries, fixed order: O8, C8, C12, RM16, RM32.
const std::vector<Entry>& list();

// Lookup by name; unknown names raise a DomainError that lists what exists.
const Entry& get(std::string_view name);

}  // namespace fulat::catalog

#endif
