#pragma once

// Text syntax for monomials and ideals.
//
//   monomial : `t3*t1^2`, `1`, or an exponent vector `(2,0,1)`
//   ideal    : monomials separated by commas or newlines; `0` alone is the
//              zero ideal. An optional first line `vars s` fixes the
//              variable count, otherwise it is the largest index seen.
//   `#` starts a comment running to the end of the line.

#include <optional>
#include <string>
#include <string_view>

#include "wogsym/monomial.hpp"

namespace wogsym {

std::string format_monomial(const ExponentVector& a);
/// `(1,2,0,0)`.
std::string format_exponents(const ExponentVector& a);
/// `(t1*t2^2, t2*t3)`; `(0)` and `(1)` for the zero and unit ideals.
std::string format_ideal(const MonomialIdeal& ideal);
/// `(t1, t3)`.
std::string format_prime(const MonomialPrime& prime);
std::string format_irreducible(const IrreducibleIdeal& q);

ExponentVector parse_monomial(std::string_view text, std::size_t numVars);
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> numVars = std::nullopt);

}  // namespace wogsym
