#ifndef CUBICMW_ZERO_SET_HPP
#define CUBICMW_ZERO_SET_HPP

// Common zeros of two ternary forms by resultant elimination in a generic
// chart. Internal to the library.

#include <cubicmw/plane_curves.hpp>

#include <optional>
#include <vector>

namespace cubicmw::detail {

/// Points {x : q(x) = 0, y = y_of_x(x)} in the affine chart z = 1 of a
/// coordinate change, each with the same intersection multiplicity.
struct ZeroCluster {
  CoordinateChange chart;
  UniPoly q;
  UniPoly y_of_x;
  int multiplicity = 1;

  int size() const { return q.degree(); }
  /// Original homogeneous coordinates as residues modulo q.
  std::array<UniPoly, 3> coords() const;
  /// A form evaluated on the cluster, reduced modulo q.
  UniPoly evaluate(const Poly3& form) const;
  /// Same points and chart, restricted to the roots of a factor of q.
  ZeroCluster restricted(const UniPoly& factor) const;
  PointOrbit orbit() const { return {chart, q, y_of_x}; }
};

/// Rational points of a cluster (in original coordinates) and the
/// remaining non-rational part, if any.
struct SplitCluster {
  std::vector<ProjPoint> points;
  std::optional<ZeroCluster> rest;
};
SplitCluster split_rational(const ZeroCluster& c);

Poly3 transform_form(const Poly3& f, const CoordinateChange& m);

/// Greatest common divisor of two nonzero forms, up to a constant factor.
Poly3 form_gcd(const Poly3& a, const Poly3& b);
/// Exact quotient of forms; throws when d does not divide a.
Poly3 form_div(const Poly3& a, const Poly3& d);

/// Deterministic sequence of coordinate changes, starting from a few sparse
/// ones and growing denser.
CoordinateChange candidate_chart(int attempt);

struct ZeroSet {
  bool common_factor = false;  // the forms share a component
  std::vector<ZeroCluster> clusters;
};

/// Common zeros of f and g with intersection multiplicities.
ZeroSet common_zeros(const Poly3& f, const Poly3& g);

/// Common zeros of f and its derivative, taken in a chart where that
/// derivative is the y-derivative. common_factor means f has a repeated
/// component. Multiplicities are not meaningful.
ZeroSet critical_zeros(const Poly3& f);

/// Evaluate a form modulo q at homogeneous coordinates given as residues.
UniPoly evaluate_mod(const Poly3& form, const std::array<UniPoly, 3>& at, const UniPoly& q);

}  // namespace cubicmw::detail

#endif  // CUBICMW_ZERO_SET_HPP
