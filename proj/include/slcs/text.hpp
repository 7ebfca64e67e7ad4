#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slcs {

// Raw bytes are 0..255. Two special values sit outside the byte range.
using Symbol = std::int32_t;
using Text = std::vector<Symbol>;

inline constexpr Symbol WILDCARD = -1;  // matches every alphabet character
inline constexpr Symbol DOLLAR = -2;    // matches only itself

inline bool matches(Symbol x, Symbol y) {
    if (x == DOLLAR || y == DOLLAR) return x == y;
    return x == y || x == WILDCARD || y == WILDCARD;
}

// '?' and '$' become WILDCARD and DOLLAR unless literal is set.
Text encode(std::string_view s, bool literal = false);
std::string decode(const Text& t);

}  // namespace slcs
