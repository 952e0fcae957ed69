#ifndef CUBICMW_FAMILIES_HPP
#define CUBICMW_FAMILIES_HPP

#include <cubicmw/fibration.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cubicmw {

enum class Family { E8a, E8b, E7a, E7b, E6a, E6b };

Family parse_family(std::string_view name);  // "E8a", ...
std::string to_string(Family f);
/// Number of free coefficients, p's first, then q's.
int family_arity(Family f);
/// Mordell-Weil lattice of a generic member: "E8", "E7v" or "E6v".
std::string family_lattice(Family f);

/// E8a: y^2 = x^3 + x (p0 + .. + p3 t^3) + q0 + .. + q3 t^3 + t^5
/// E8b: y^2 = x^3 + t^2 x^2 + x (p0 + .. + p2 t^2) + q0 + .. + q4 t^4 + t^5
/// E7a: y^2 = x^3 + x (p0 + p1 t + t^3) + q0 + .. + q4 t^4
/// E7b: y^2 + t x y = x^3 + x (p0 + .. + p2 t^2) + q0 + .. + q3 t^3 - t^4
/// E6a: y^2 + t^2 y = x^3 + x (p0 + .. + p2 t^2) + q0 + .. + q2 t^2
/// E6b: y^2 + t x y = x^3 + x (p0 + .. + p2 t^2) + q0 + .. + q3 t^3
WeierstrassModel instantiate_family(Family f, const std::vector<Rat>& coefficients);

}  // namespace cubicmw

#endif  // CUBICMW_FAMILIES_HPP
