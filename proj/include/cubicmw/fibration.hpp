#ifndef CUBICMW_FIBRATION_HPP
#define CUBICMW_FIBRATION_HPP

#include <cubicmw/lattices.hpp>
#include <cubicmw/place.hpp>
#include <cubicmw/plane_curves.hpp>
#include <cubicmw/ratfunc.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubicmw {

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q[t].
class WeierstrassModel {
 public:
  /// Throws NotElliptic when the discriminant vanishes identically.
  WeierstrassModel(UniPoly a1, UniPoly a2, UniPoly a3, UniPoly a4, UniPoly a6);
  /// Short form y^2 = x^3 + a4 x + a6.
  static WeierstrassModel short_form(UniPoly a4, UniPoly a6);

  const UniPoly& a1() const { return a_[0]; }
  const UniPoly& a2() const { return a_[1]; }
  const UniPoly& a3() const { return a_[2]; }
  const UniPoly& a4() const { return a_[3]; }
  const UniPoly& a6() const { return a_[4]; }

  /// Smallest k with deg a_i <= k i for every i.
  int infinity_weight() const;
  /// The model in s = 1/t, scaled by weight infinity_weight() so that the
  /// coefficients are polynomials in s (printed as t).
  WeierstrassModel at_infinity() const;

  std::string to_string() const;
  bool operator==(const WeierstrassModel&) const = default;

 private:
  std::array<UniPoly, 5> a_;
};

/// Parse "y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6" with each a_i a
/// polynomial in t. Terms may appear on either side in any order.
WeierstrassModel parse_weierstrass(std::string_view text);

struct CurveInvariants {
  UniPoly b2, b4, b6, b8, c4, c6, delta;
};
CurveInvariants curve_invariants(const WeierstrassModel& m);

/// Valuations of (c4, c6, delta) at a place; nullopt stands for a vanishing
/// invariant (infinite valuation).
struct ValuationSignature {
  std::optional<int> c4, c6;
  int delta = 0;

  /// Strip (4, 6, 12) steps while the model is not minimal. Returns the
  /// number of steps removed.
  int minimalize();
  std::string to_string() const;  // "(3, 4, 8)", "inf" for a vanishing one
  bool operator==(const ValuationSignature&) const = default;
};

struct PlaceSignature {
  PlaceCluster place;
  ValuationSignature signature;
};

/// Places where the discriminant vanishes, refined so that every cluster
/// carries one valuation triple. Finite clusters come first in PlaceCluster
/// order, then infinity.
std::vector<PlaceSignature> place_clusters(const WeierstrassModel& m);

enum class KodairaType { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaFiber {
  KodairaType type = KodairaType::I0;
  int n = 0;           // index of I_n and I_n*
  int euler = 0;       // e
  int components = 1;  // m_v
  std::optional<RootLatticeId> t_lattice;

  std::string name() const;  // "I3", "III", "I2*", "IV*"
  /// Contribution of a section meeting a non-identity component. For I_n,
  /// `index` is the component number i (0 < i < n). For I_n* the flag
  /// selects a far component.
  Rat contribution(int index = 1, bool far = false) const;

  bool operator==(const KodairaFiber&) const = default;
};

/// Fiber type from a valuation triple, after minimalization. Throws on
/// signatures outside the characteristic-zero table.
KodairaFiber kodaira_classify(ValuationSignature signature);

struct FiberEntry {
  PlaceCluster place;
  ValuationSignature signature;  // as read off the model
  int minimal_shift = 0;         // (4, 6, 12) steps removed
  KodairaFiber fiber;
};

struct FiberConfiguration {
  std::vector<FiberEntry> fibers;  // singular fibers only
  int chi = 1;
  int rho = 10;

  int euler_total() const;
};

/// Classifies every place and audits the Euler number against 12 chi;
/// throws InconsistentSurface otherwise.
FiberConfiguration fiber_configuration(const WeierstrassModel& m);

int shioda_tate_rank(const FiberConfiguration& cfg);

/// Root lattices of the reducible fibers, one per geometric place, sorted
/// E before D before A and by decreasing rank.
std::vector<RootLatticeId> trivial_lattice(const FiberConfiguration& cfg);
/// "E6+A1", "A1^2", or "0" for the empty lattice.
std::string lattice_symbol(const std::vector<RootLatticeId>& t);

struct MWGroupDescriptor {
  std::vector<LatticeName> lattice_parts;  // empty means the zero lattice
  AbelianGroupDescriptor torsion;
  int rank = 0;

  std::string lattice() const;  // "E7v", "D4v+A1v", "0"
  bool operator==(const MWGroupDescriptor&) const = default;
};

/// Lookup in the embedded classification table of Mordell-Weil groups of
/// rational elliptic surfaces. Throws Unsupported when the trivial lattice
/// is not listed.
MWGroupDescriptor identify_mw(std::vector<RootLatticeId> t);

/// A point of E(Q(t)): the zero section or affine coordinates.
class Section {
 public:
  Section() = default;  // zero section
  Section(RatFunc x, RatFunc y) : xy_(std::pair{std::move(x), std::move(y)}) {}

  bool is_zero() const { return !xy_; }
  const RatFunc& x() const { return xy_->first; }
  const RatFunc& y() const { return xy_->second; }

  bool operator==(const Section&) const = default;

 private:
  std::optional<std::pair<RatFunc, RatFunc>> xy_;
};

bool on_curve(const Section& p, const WeierstrassModel& m);
Section negate(const Section& p, const WeierstrassModel& m);
Section add(const Section& p, const Section& q, const WeierstrassModel& m);

/// (P, O): pole orders of x halved, summed over all places.
int intersection_with_zero(const Section& p, const WeierstrassModel& m);
/// (P, Q) for distinct sections from local intersection numbers at the
/// places where they meet.
int section_intersection(const Section& p, const Section& q, const WeierstrassModel& m);

/// Which component a section meets at one reducible fiber.
struct ComponentHit {
  std::size_t fiber_index = 0;  // into FiberConfiguration::fibers
  bool identity = true;
  int index = 0;  // component number for I_n
  Rat contribution;
};
std::vector<ComponentHit> components_met(const Section& p, const WeierstrassModel& m, const FiberConfiguration& cfg);

/// <P, Q>. The diagonal is 2 chi + 2 (P, O) - sum of contributions; other
/// values come from it by polarization through the group law. Needs a
/// model that is minimal at every place.
Rat height_pairing(const Section& p, const Section& q, const WeierstrassModel& m, const FiberConfiguration& cfg);

/// True iff the section meets the identity component of every fiber.
bool narrow_membership(const Section& p, const WeierstrassModel& m, const FiberConfiguration& cfg);

/// Polynomial coordinates with deg x <= 2 and deg y <= 3.
bool is_integral_section(const Section& p);

/// Weierstrass model of the elliptic surface of the pencil H1 + t H2, by
/// projecting from a rational base point and taking the Jacobian of the
/// resulting double cover of the line.
WeierstrassModel cubic_to_weierstrass(const CubicPencil& pencil, const ProjPoint& base);

}  // namespace cubicmw

#endif  // CUBICMW_FIBRATION_HPP
