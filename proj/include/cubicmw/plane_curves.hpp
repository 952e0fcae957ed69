#ifndef CUBICMW_PLANE_CURVES_HPP
#define CUBICMW_PLANE_CURVES_HPP

#include <cubicmw/mpoly.hpp>

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace cubicmw {

/// Point of P^2(Q), normalized so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(const Rat& x, const Rat& y, const Rat& z);
  explicit ProjPoint(const std::array<Rat, 3>& c) : ProjPoint(c[0], c[1], c[2]) {}

  const std::array<Rat, 3>& coords() const { return c_; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  /// Index of the coordinate normalized to 1.
  std::size_t chart() const;
  /// "[a, b, c]" with entries in lowest terms.
  std::string to_string() const;

  bool operator==(const ProjPoint& other) const { return c_ == other.c_; }
  bool operator<(const ProjPoint& other) const { return c_ < other.c_; }

 private:
  std::array<Rat, 3> c_;
};

/// Integer projective change of coordinates: original = matrix * chart point.
using CoordinateChange = std::array<std::array<Int, 3>, 3>;

/// A Galois-stable set of points of P^2 that is never expanded into
/// coordinates. In the affine chart (x, y, 1) of `chart` the points are
/// {x : defining_poly(x) = 0, y = y_of_x(x)}.
struct PointOrbit {
  CoordinateChange chart;
  UniPoly defining_poly;  // monic, squarefree
  UniPoly y_of_x;         // reduced modulo defining_poly
  int size() const { return defining_poly.degree(); }
  std::string to_string() const;
};

using PointLocus = std::variant<ProjPoint, PointOrbit>;

inline int locus_size(const PointLocus& l) {
  return std::holds_alternative<ProjPoint>(l) ? 1 : std::get<PointOrbit>(l).size();
}
std::string locus_to_string(const PointLocus& l);

/// A plane curve given by a nonzero homogeneous form.
class PlaneCurve {
 public:
  explicit PlaneCurve(HomogeneousPoly3 poly);
  const HomogeneousPoly3& poly() const { return poly_; }
  int degree() const { return poly_.degree(); }
  Rat operator()(const ProjPoint& p) const { return poly_(p.coords()); }
  std::string to_string() const { return poly_.to_string(); }

 private:
  HomogeneousPoly3 poly_;
};

class CubicPencil {
 public:
  /// Throws Error::Kind::InvalidPencil when h1, h2 share a component.
  CubicPencil(PlaneCurve h1, PlaneCurve h2);
  const PlaneCurve& h1() const { return h1_; }
  const PlaneCurve& h2() const { return h2_; }
  /// The member s*h1 + t*h2.
  PlaneCurve member(const Rat& s, const Rat& t) const;

 private:
  PlaneCurve h1_, h2_;
};

struct BasePointRecord {
  PointLocus locus;
  int multiplicity = 1;  // I_p(h1, h2) at each point of the locus
  bool simple = true;    // multiplicity == 1
};

enum class SingularityClass { Node, Cusp, TacnodeOrWorse, TriplePoint };
std::string to_string(SingularityClass c);

struct SingularPoint {
  PointLocus locus;
  std::optional<SingularityClass> type;  // rational points only
};

/// Intersection multiplicity; nullopt stands for an infinite value (a common
/// component through the point).
using IntersectionNumber = std::optional<int>;

int curve_multiplicity(const PlaneCurve& c, const ProjPoint& p);
IntersectionNumber intersection_multiplicity(const PlaneCurve& f, const PlaneCurve& g, const ProjPoint& p);

/// All common points of the two generators with multiplicities. Rational
/// points come first in lexicographic order, followed by orbits.
std::vector<BasePointRecord> base_points(const CubicPencil& pencil);

/// The pencil of cubics through 8 distinct rational points.
CubicPencil pencil_through_points(std::span<const ProjPoint> points);

struct GeneralPositionReport {
  std::vector<std::array<std::size_t, 3>> collinear;  // index triples on a line
  std::vector<std::array<std::size_t, 6>> on_conic;   // index sextuples on a conic
  bool in_general_position() const { return collinear.empty() && on_conic.empty(); }
};
GeneralPositionReport general_position(std::span<const ProjPoint> points);

/// Singular points of a reduced curve; throws "repeated component" otherwise.
std::vector<SingularPoint> singular_points(const PlaneCurve& c);
SingularityClass classify_singularity(const PlaneCurve& c, const ProjPoint& p);
bool is_reduced(const PlaneCurve& c);
bool is_smooth(const PlaneCurve& c);
bool has_rational_linear_factor(const PlaneCurve& c);
bool is_absolutely_irreducible(const PlaneCurve& c);

/// Parameter [s:t] of a pencil member, normalized like a projective point.
struct PencilParameter {
  Rat s, t;
  PencilParameter(const Rat& s_, const Rat& t_);
  std::string to_string() const;
  bool operator==(const PencilParameter&) const = default;
};

struct SingularMember {
  /// Rational member, or an orbit of conjugate members [1:mu] with
  /// `mu_poly(mu) = 0`.
  std::variant<PencilParameter, UniPoly> parameter;
  /// Singular points of a rational member (empty when the member has a
  /// repeated component).
  std::vector<SingularPoint> witness;
  bool non_reduced = false;
  int size() const;
};

struct SingularMembersReport {
  std::vector<SingularMember> members;
  /// Some point is singular on every member, or every member is singular.
  bool every_member_singular = false;
  /// The locus where the gradients are parallel is a curve; members listed
  /// may then be incomplete.
  bool positive_dimensional = false;
};

SingularMembersReport singular_members(const CubicPencil& pencil);
bool smooth_member_exists(const CubicPencil& pencil);

// Cuspidal cubic Y^2 Z = X^3 with identity at the flex [0:1:0]; its smooth
// locus is the additive group in the parameter u = X/Y.

/// The point with parameter u, i.e. [u : 1 : u^3].
ProjPoint cusp_point(const Rat& u);
Rat cusp_parameter(const ProjPoint& p);
bool cusp_collinear(const Rat& u1, const Rat& u2, const Rat& u3);
Rat ninth_base_parameter(std::span<const Rat> u);
Rat manin_q_parameter(std::span<const Rat> u);

}  // namespace cubicmw

#endif  // CUBICMW_PLANE_CURVES_HPP
