#ifndef CUBICMW_PLACE_HPP
#define CUBICMW_PLACE_HPP

#include <cubicmw/unipoly.hpp>

#include <string>

namespace cubicmw {

/// A Galois-stable set of places of P^1 over Q: the roots of a monic
/// squarefree polynomial, or the single place at infinity.
class PlaceCluster {
 public:
  enum class Kind { Finite, Infinity };

  static PlaceCluster finite(const UniPoly& defining_poly);
  static PlaceCluster infinity() { return PlaceCluster(); }

  Kind kind() const { return kind_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  /// Only meaningful for finite clusters.
  const UniPoly& defining_poly() const { return poly_; }
  int point_count() const { return is_infinity() ? 1 : poly_.degree(); }
  bool is_rational() const { return point_count() == 1; }

  std::string to_string(char var = 't') const;

  bool operator==(const PlaceCluster&) const = default;
  /// Finite clusters ordered by (degree, coefficients); infinity last.
  bool operator<(const PlaceCluster& other) const;

 private:
  PlaceCluster() : kind_(Kind::Infinity) {}
  Kind kind_;
  UniPoly poly_;
};

/// Largest n with defining_poly^n dividing f.
int valuation(const UniPoly& f, const PlaceCluster& place);

/// Refine a cluster so that f has uniform valuation on each piece. Returns
/// (sub-cluster polynomial, valuation) pairs; f must be nonzero.
std::vector<std::pair<UniPoly, int>> valuation_split(const UniPoly& cluster, const UniPoly& f);

}  // namespace cubicmw

#endif  // CUBICMW_PLACE_HPP
