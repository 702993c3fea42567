#include "fulat/int128.hpp"

#include <algorithm>

namespace fulat {

std::string int_to_string(Int v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    // Avoid negating INT128_MIN by working on the unsigned magnitude.
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

Int int_from_string(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw ParseError("sign without digits in integer literal");
    unsigned __int128 u = 0;
    constexpr unsigned __int128 kMax = ~(unsigned __int128)0;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c < '0' || c > '9')
            throw ParseError(std::string("bad digit in integer literal: '") + std::string(s) + "'");
        if (u > (kMax - unsigned(c - '0')) / 10) throw ParseError("integer literal overflows");
        u = u * 10 + unsigned(c - '0');
    }
    const unsigned __int128 limit =
        (unsigned __int128)1 << 126;  // stay well inside signed range
    if (u > limit) throw ParseError("integer literal overflows");
    Int v = Int(u);
    return neg ? -v : v;
}

}  // namespace fulat
