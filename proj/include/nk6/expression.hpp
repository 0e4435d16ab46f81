#pragma once

#include <map>
#include <string>
#include <string_view>

#include "nk6/polynomial.hpp"

namespace nk6 {

// numerator / denominator with a monomial denominator.
struct MonomialFraction {
  Polynomial numerator;
  Polynomial denominator;
};

using ConstantMap = std::map<std::string, Rational, std::less<>>;

// Grammar: sums of products of integers, ring variables, named constants and
// parenthesized (or braced) subexpressions; '^' takes a nonnegative integer.
// Division is allowed by nonzero monomials. Throws SyntaxError.
MonomialFraction parse_fraction(std::string_view text, const RingPtr& ring, const ConstantMap& constants = {});
// Throws SyntaxError when a denominator remains.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const ConstantMap& constants = {});

}  // namespace nk6
