#ifndef CUBICMW_PARSE_HPP
#define CUBICMW_PARSE_HPP

#include <cubicmw/mpoly.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cubicmw {

/// Parse a polynomial over the named variables (at most three). Terms are
/// joined by + and -, monomials by *, powers by ^ with a nonnegative integer
/// exponent; rational constants may be written p/q and parentheses group.
/// Whitespace is ignored and names are case-sensitive. Errors are reported
/// as Error::Kind::Parse with the column of the offending character.
Poly3 parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Univariate polynomial in t.
UniPoly parse_unipoly(std::string_view text, std::string_view variable = "t");

/// Ternary form in X, Y, Z; must be homogeneous.
HomogeneousPoly3 parse_form(std::string_view text);

}  // namespace cubicmw

#endif  // CUBICMW_PARSE_HPP
