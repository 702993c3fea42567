#ifndef FULAT_INT128_HPP
#define FULAT_INT128_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "fulat/errors.hpp"

namespace fulat {

// Exact coefficient type for enumerator polynomials.  128 bits is enough for
// every transform this library admits: a MacWilliams substitution needs at
// most mass * 4^n per coefficient, and inputs are rejected before that
// product can reach 2^126.
using Int = __int128;

std::string int_to_string(Int v);
Int int_from_string(std::string_view s);  // throws ParseError

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw CapacityError("exact integer overflow (128-bit) during polynomial arithmetic");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CapacityError("exact integer overflow (128-bit) during polynomial arithmetic");
    return r;
}

// 2^e as an Int; e must stay below 127.
inline Int int_pow2(int e) {
    if (e < 0 || e >= 127) throw CapacityError("power of two out of 128-bit range");
    return Int(1) << e;
}

}  // namespace fulat

#endif
