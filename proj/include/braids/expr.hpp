#pragma once

#include "braids/os_algebra.hpp"
#include "braids/words.hpp"

#include <string>
#include <string_view>

namespace braids {

struct ParseError : Error {
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Surface syntax for words: generators (x1/x/y, s1, A[1,2]), juxtaposition
// for products, ^int powers, [u,v] commutators, parentheses, and 1 for the
// identity. Whitespace separates factors.
ReducedWord parse_word(std::string_view text, const Alphabet& alphabet);

// Canonical reparseable form of a reduced word.
std::string print_word(const ReducedWord& w);

// Linear combinations of the degree-one basis, e.g. "a[1,2] - 2/3 a[2,3]".
RatVector parse_linear_combination(std::string_view text, const OSAlgebra2& os);

}  // namespace braids
