#include <cubicmw/linalg.hpp>
#include <cubicmw/plane_curves.hpp>

#include "zero_set.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

namespace cubicmw {

using detail::ZeroCluster;
using detail::form_div;
using detail::form_gcd;

// ------------------------------------------------------------------ points

ProjPoint::ProjPoint(const Rat& x, const Rat& y, const Rat& z) : c_{x, y, z} {
  std::size_t k = 0;
  while (k < 3 && c_[k] == 0) ++k;
  if (k == 3) throw domain_error("projective point with all coordinates zero");
  const Rat inv = Rat(1) / c_[k];
  for (auto& v : c_) v *= inv;
}

std::size_t ProjPoint::chart() const {
  std::size_t k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

std::string ProjPoint::to_string() const {
  return "[" + cubicmw::to_string(c_[0]) + ", " + cubicmw::to_string(c_[1]) + ", " + cubicmw::to_string(c_[2]) + "]";
}

std::string PointOrbit::to_string() const {
  std::ostringstream os;
  os << "orbit of " << size() << " points {" << defining_poly.to_string('x') << " = 0, y = " << y_of_x.to_string('x')
     << "} in chart [";
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < 3; ++j) os << (j ? ", " : "") << chart[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string locus_to_string(const PointLocus& l) {
  return std::visit([](const auto& v) { return v.to_string(); }, l);
}

PlaneCurve::PlaneCurve(HomogeneousPoly3 poly) : poly_(std::move(poly)) {
  if (poly_.is_zero()) throw domain_error("plane curve given by the zero form");
}

CubicPencil::CubicPencil(PlaneCurve h1, PlaneCurve h2) : h1_(std::move(h1)), h2_(std::move(h2)) {
  if (h1_.degree() != 3 || h2_.degree() != 3) throw Error(Error::Kind::InvalidPencil, "pencil generators must be cubics");
  if (detail::common_zeros(h1_.poly().poly(), h2_.poly().poly()).common_factor)
    throw Error(Error::Kind::InvalidPencil, "pencil generators share a common component");
}

PlaneCurve CubicPencil::member(const Rat& s, const Rat& t) const {
  if (s == 0 && t == 0) throw domain_error("pencil parameter [0:0]");
  return PlaneCurve(HomogeneousPoly3(h1_.poly().poly() * s + h2_.poly().poly() * t, 3));
}

std::string to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Node: return "node";
    case SingularityClass::Cusp: return "cusp";
    case SingularityClass::TacnodeOrWorse: return "tacnode_or_worse";
    case SingularityClass::TriplePoint: return "triple_point";
  }
  return "?";
}

PencilParameter::PencilParameter(const Rat& s_, const Rat& t_) {
  if (s_ != 0) {
    s = 1;
    t = t_ / s_;
  } else if (t_ != 0) {
    s = 0;
    t = 1;
  } else {
    throw domain_error("pencil parameter [0:0]");
  }
}

std::string PencilParameter::to_string() const { return "[" + s.get_str() + ":" + t.get_str() + "]"; }

int SingularMember::size() const {
  return std::holds_alternative<PencilParameter>(parameter) ? 1 : std::get<UniPoly>(parameter).degree();
}

// --------------------------------------------------------- local geometry

namespace {

// The curve in affine coordinates (u, v) centered at p.
Poly2 local_poly(const Poly3& f, const ProjPoint& p) {
  const std::size_t k = p.chart();
  std::array<Poly2, 3> images;
  std::size_t next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k)
      images[i] = Poly2::constant(Rat(1));
    else
      images[i] = Poly2::constant(p[i]) + Poly2::variable(next++);
  }
  return f.substitute<2>(images);
}

UniPoly on_u_axis(const Poly2& f) {
  std::vector<Rat> c;
  for (const auto& [e, v] : f.terms()) {
    if (e[1] != 0) continue;
    if (static_cast<int>(c.size()) <= e[0]) c.resize(static_cast<std::size_t>(e[0]) + 1);
    c[static_cast<std::size_t>(e[0])] = v;
  }
  return UniPoly(std::move(c));
}

Poly2 divide_by_v(const Poly2& f) {
  Poly2 out;
  for (const auto& [e, c] : f.terms()) out.add_term({e[0], e[1] - 1}, c);
  return out;
}

// Fulton's algorithm at the origin.
IntersectionNumber fulton(Poly2 f, Poly2 g) {
  const std::array<Rat, 2> origin{Rat(0), Rat(0)};
  int acc = 0;
  while (true) {
    if (f(origin) != 0 || g(origin) != 0) return acc;
    if (f.is_zero() || g.is_zero()) return std::nullopt;
    UniPoly r = on_u_axis(f), s = on_u_axis(g);
    if (r.is_zero() && s.is_zero()) return std::nullopt;  // v divides both
    if (s.is_zero()) {
      std::swap(f, g);
      std::swap(r, s);
    }
    if (r.is_zero()) {
      // f = v * h: I(v, g) is the order of g(u, 0) at u = 0.
      acc += s.low_degree();
      f = divide_by_v(f);
      continue;
    }
    if (r.degree() > s.degree()) {
      std::swap(f, g);
      std::swap(r, s);
    }
    // Cancel the leading term of g(u, 0).
    Poly2::Exponent shift{s.degree() - r.degree(), 0};
    g = g * (Rat(1) / s.leading()) - Poly2::monomial(shift, Rat(1) / r.leading()) * f;
  }
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ca = a.coeffs(), cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

bool orbit_less(const PointOrbit& a, const PointOrbit& b) {
  if (a.defining_poly != b.defining_poly) return poly_less(a.defining_poly, b.defining_poly);
  return poly_less(a.y_of_x, b.y_of_x);
}

template <class Rec>
void sort_by_locus(std::vector<Rec>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Rec& a, const Rec& b) {
    const bool ra = std::holds_alternative<ProjPoint>(a.locus), rb = std::holds_alternative<ProjPoint>(b.locus);
    if (ra != rb) return ra;
    if (ra) return std::get<ProjPoint>(a.locus) < std::get<ProjPoint>(b.locus);
    return orbit_less(std::get<PointOrbit>(a.locus), std::get<PointOrbit>(b.locus));
  });
}

// The 10 cubic monomials X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z, YZ^2, Z^3.
std::vector<Poly3::Exponent> cubic_monomials() {
  std::vector<Poly3::Exponent> out;
  for (int i = 3; i >= 0; --i)
    for (int j = 3 - i; j >= 0; --j) out.push_back({i, j, 3 - i - j});
  return out;
}

Rat monomial_value(const Poly3::Exponent& e, const ProjPoint& p) {
  Rat v(1);
  for (std::size_t i = 0; i < 3; ++i)
    for (int k = 0; k < e[i]; ++k) v *= p[i];
  return v;
}

// Restrict a cluster to the points where every given form vanishes.
UniPoly vanishing_part(const ZeroCluster& c, std::span<const Poly3> forms) {
  UniPoly q = c.q;
  for (const auto& f : forms) {
    if (q.degree() <= 0) break;
    q = gcd_split(q, c.restricted(q).evaluate(f)).first;
  }
  return q;
}

}  // namespace

int curve_multiplicity(const PlaneCurve& c, const ProjPoint& p) {
  return local_poly(c.poly().poly(), p).low_total_degree();
}

IntersectionNumber intersection_multiplicity(const PlaneCurve& f, const PlaneCurve& g, const ProjPoint& p) {
  return fulton(local_poly(f.poly().poly(), p), local_poly(g.poly().poly(), p));
}

// ------------------------------------------------------------ base points

std::vector<BasePointRecord> base_points(const CubicPencil& pencil) {
  const auto zeros = detail::common_zeros(pencil.h1().poly().poly(), pencil.h2().poly().poly());
  if (zeros.common_factor) throw Error(Error::Kind::InvalidPencil, "pencil generators share a common component");

  std::vector<BasePointRecord> out;
  int total = 0;
  for (const auto& cluster : zeros.clusters) {
    const auto split = detail::split_rational(cluster);
    for (const auto& p : split.points) {
      const auto ip = intersection_multiplicity(pencil.h1(), pencil.h2(), p);
      if (!ip || *ip != cluster.multiplicity) throw domain_error("intersection multiplicity mismatch at " + p.to_string());
      out.push_back({p, *ip, *ip == 1});
    }
    if (split.rest) out.push_back({split.rest->orbit(), cluster.multiplicity, cluster.multiplicity == 1});
  }
  for (const auto& r : out) total += r.multiplicity * locus_size(r.locus);
  if (total != 9) throw domain_error("base point count " + std::to_string(total) + " violates Bezout");
  sort_by_locus(out);
  return out;
}

CubicPencil pencil_through_points(std::span<const ProjPoint> points) {
  if (points.size() != 8) throw domain_error("a pencil needs exactly 8 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw domain_error("repeated point " + points[i].to_string());

  const auto monos = cubic_monomials();
  RatMatrix m;
  for (const auto& p : points) {
    RatVector row;
    for (const auto& e : monos) row.push_back(monomial_value(e, p));
    m.push_back(std::move(row));
  }
  const auto basis = nullspace(m);
  if (basis.size() != 2) throw domain_error("points impose dependent conditions");
  std::array<Poly3, 2> forms;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < monos.size(); ++i) forms[k].add_term(monos[i], basis[k][i]);
  return CubicPencil(PlaneCurve(HomogeneousPoly3(forms[0], 3)), PlaneCurve(HomogeneousPoly3(forms[1], 3)));
}

GeneralPositionReport general_position(std::span<const ProjPoint> points) {
  GeneralPositionReport report;
  const std::size_t n = points.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        RatMatrix m{{points[a][0], points[a][1], points[a][2]},
                    {points[b][0], points[b][1], points[b][2]},
                    {points[c][0], points[c][1], points[c][2]}};
        if (determinant(m) == 0) report.collinear.push_back({a, b, c});
      }
  if (n < 6) return report;
  std::array<std::size_t, 6> idx{};
  // Enumerate 6-subsets in lexicographic order.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + 6, true);
  do {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx[k++] = i;
    RatMatrix m;
    for (auto i : idx) {
      const auto& p = points[i];
      m.push_back({p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]});
    }
    if (determinant(m) == 0) report.on_conic.push_back(idx);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return report;
}

// ------------------------------------------------------------ singularities

std::vector<SingularPoint> singular_points(const PlaneCurve& c) {
  const Poly3& f = c.poly().poly();
  const auto zeros = detail::critical_zeros(f);
  if (zeros.common_factor) throw domain_error("repeated component");
  const std::array<Poly3, 3> grad{f.derivative(0), f.derivative(1), f.derivative(2)};

  std::vector<SingularPoint> out;
  for (const auto& cluster : zeros.clusters) {
    const UniPoly q = vanishing_part(cluster, grad);
    if (q.degree() <= 0) continue;
    const auto split = detail::split_rational(cluster.restricted(q));
    for (const auto& p : split.points) out.push_back({p, classify_singularity(c, p)});
    if (split.rest) out.push_back({split.rest->orbit(), std::nullopt});
  }
  sort_by_locus(out);
  return out;
}

SingularityClass classify_singularity(const PlaneCurve& c, const ProjPoint& p) {
  const Poly2 f = local_poly(c.poly().poly(), p);
  const int m = f.low_total_degree();
  if (m < 2) throw domain_error("point " + p.to_string() + " is not singular");
  if (m >= 3) return SingularityClass::TriplePoint;

  const Rat a = f.coeff({2, 0}), b = f.coeff({1, 1}), cc = f.coeff({0, 2});
  if (b * b - 4 * a * cc != 0) return SingularityClass::Node;

  // Make the double tangent the line V = 0, then blow up with V = U * W.
  std::array<Poly2, 2> to_uv;
  const Poly2 U = Poly2::variable(0), V = Poly2::variable(1);
  if (a != 0) {
    const Rat k = b / (2 * a);  // tangent u + k v
    to_uv = {V - U * k, U};
  } else {
    to_uv = {U, V};
  }
  const Poly2 g = f.substitute<2>(to_uv);
  const Poly2 blown = g.substitute<2>({U, U * Poly2::variable(1)});
  Poly2 h;
  for (const auto& [e, coef] : blown.terms()) h.add_term({e[0] - 2, e[1]}, coef);
  const bool smooth = h.coeff({1, 0}) != 0 || h.coeff({0, 1}) != 0;
  return smooth ? SingularityClass::Cusp : SingularityClass::TacnodeOrWorse;
}

bool is_reduced(const PlaneCurve& c) { return !detail::critical_zeros(c.poly().poly()).common_factor; }

bool is_smooth(const PlaneCurve& c) { return is_reduced(c) && singular_points(c).empty(); }

bool has_rational_linear_factor(const PlaneCurve& c) {
  const Poly3& f = c.poly().poly();
  // Every rational line meets two coordinate lines in distinct rational
  // points of the curve, unless it is a coordinate line itself.
  std::vector<ProjPoint> pts;
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t i = (k + 1) % 3, j = (k + 2) % 3;
    std::array<MPoly<1>, 3> img;
    img[k] = MPoly<1>();
    img[i] = MPoly<1>::variable(0);
    img[j] = MPoly<1>::constant(Rat(1));
    const MPoly<1> b = f.substitute<1>(img);
    std::array<Rat, 3> at{};
    at[i] = 1;
    const Rat at_inf = f(at);
    if (b.is_zero() && at_inf == 0) return true;
    std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(b.total_degree(), 0)) + 1);
    for (const auto& [e, v] : b.terms()) coeffs[static_cast<std::size_t>(e[0])] = v;
    const UniPoly bu(std::move(coeffs));
    if (at_inf == 0) pts.emplace_back(at);
    if (bu.degree() > 0)
      for (const Rat& r : rational_roots(bu)) {
        std::array<Rat, 3> p{};
        p[i] = r;
        p[j] = 1;
        pts.emplace_back(p);
      }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const int d = c.degree();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      bool on_line = f(pts[b].coords()) == 0;
      for (int lambda = 0; on_line && lambda <= d; ++lambda) {
        std::array<Rat, 3> q;
        for (std::size_t i = 0; i < 3; ++i) q[i] = pts[a][i] + lambda * pts[b][i];
        on_line = f(q) == 0;
      }
      if (on_line) return true;
    }
  return false;
}

bool is_absolutely_irreducible(const PlaneCurve& c) {
  if (c.degree() != 3) throw domain_error("irreducibility test expects a cubic");
  if (!is_reduced(c) || has_rational_linear_factor(c)) return false;
  const auto sing = singular_points(c);
  int count = 0;
  for (const auto& s : sing) count += locus_size(s.locus);
  if (count >= 2) return false;
  if (count == 1) {
    const auto t = sing.front().type;
    if (t == SingularityClass::TriplePoint || t == SingularityClass::TacnodeOrWorse) return false;
  }
  return true;
}

// ---------------------------------------------------------- singular members

namespace {

Poly3 line_form(int a, int b, int c) {
  return Poly3::variable(0) * Rat(a) + Poly3::variable(1) * Rat(b) + Poly3::variable(2) * Rat(c);
}

// Keep a list of pairwise coprime squarefree polynomials whose product has
// the same roots as everything added so far.
void add_coprime(std::vector<UniPoly>& basis, const UniPoly& poly) {
  UniPoly h = squarefree_part(poly).monic();
  std::vector<UniPoly> out;
  for (const auto& e : basis) {
    const UniPoly g = gcd(e, h);
    if (g.degree() > 0) {
      out.push_back(g);
      const UniPoly rest = exact_div(e, g);
      if (rest.degree() > 0) out.push_back(rest.monic());
      h = exact_div(h, g);
    } else {
      out.push_back(e);
    }
  }
  if (h.degree() > 0) out.push_back(h.monic());
  basis = std::move(out);
}

// Polynomial in mu whose roots are the values of mu_of_x over the roots of q.
UniPoly image_poly(const UniPoly& q, const UniPoly& mu_of_x) {
  BiPoly f, g;
  for (const auto& c : q.coeffs()) f.coeffs.push_back(UniPoly::constant(c));
  const int dm = std::max(mu_of_x.degree(), 0);
  for (int i = 0; i <= dm; ++i) g.coeffs.push_back(UniPoly::constant(-mu_of_x.coeff(i)));
  g.coeffs[0] += UniPoly::variable();
  g.trim();
  return poly_resultant(f, g).monic();
}

// Members [s:t] of a pencil, rational ones exactly and the others as
// coprime polynomials in mu for the members [1:mu].
struct MemberSet {
  std::set<std::pair<Rat, Rat>> rational;
  std::vector<UniPoly> irrational;
  bool common_singular_point = false;

  void add_mu_poly(const UniPoly& p) {
    UniPoly rest = squarefree_part(p).monic();
    for (const Rat& r : rational_roots(rest)) {
      rational.insert({Rat(1), r});
      rest = exact_div(rest, UniPoly::linear_root(r));
    }
    if (rest.degree() > 0) add_coprime(irrational, rest);
  }

  UniPoly irrational_product() const {
    UniPoly p = UniPoly::constant(Rat(1));
    for (const auto& e : irrational) p = p * e;
    return p;
  }

  bool operator==(const MemberSet& o) const {
    return rational == o.rational && irrational_product() == o.irrational_product();
  }

  MemberSet intersect(const MemberSet& o) const {
    MemberSet out;
    std::set_intersection(rational.begin(), rational.end(), o.rational.begin(), o.rational.end(),
                          std::inserter(out.rational, out.rational.end()));
    const UniPoly g = gcd(irrational_product(), o.irrational_product());
    if (g.degree() > 0) out.add_mu_poly(g);
    return out;
  }
};

struct Gradients {
  std::array<Poly3, 3> g1, g2;
};

// The members singular at the points of a cluster where the gradients are
// parallel.
void collect_members(const ZeroCluster& c, const Gradients& grad, MemberSet& out) {
  const UniPoly& q = c.q;
  const auto coords = c.coords();
  std::array<UniPoly, 3> e1, e2;
  for (std::size_t k = 0; k < 3; ++k) {
    e1[k] = detail::evaluate_mod(grad.g1[k], coords, q);
    e2[k] = detail::evaluate_mod(grad.g2[k], coords, q);
  }

  // Where the gradient of h2 vanishes the member is [0:1], unless h1 is
  // singular there too.
  UniPoly qa = q;
  for (const auto& v : e2) qa = gcd_split(qa, v).first;
  if (qa.degree() > 0) {
    UniPoly both = qa;
    for (const auto& v : e1) both = gcd_split(both, v).first;
    if (both.degree() > 0) out.common_singular_point = true;
    if (exact_div(qa, both).degree() > 0) out.rational.insert({Rat(0), Rat(1)});
  }

  // Elsewhere s * grad h1 + t * grad h2 = 0 gives t/s = -e1[k] / e2[k] on
  // the part where e2[k] does not vanish.
  UniPoly rest = exact_div(q, qa);
  for (std::size_t k = 0; k < 3 && rest.degree() > 0; ++k) {
    const auto [zero_k, live] = gcd_split(rest, e2[k] % rest);
    if (live.degree() > 0) {
      const UniPoly mu = -(e1[k] % live) * inverse_mod(e2[k] % live, live) % live;
      out.add_mu_poly(image_poly(live, mu));
    }
    rest = zero_k;
  }
}

// Members singular along a curve component g of the parallel-gradient
// locus, read off from its points on a line. nullopt if the line is a
// component.
std::optional<MemberSet> members_along(const Poly3& g, const Poly3& line, const Gradients& grad) {
  const auto z = detail::common_zeros(g, line);
  if (z.common_factor) return std::nullopt;
  MemberSet out;
  for (const auto& c : z.clusters) collect_members(c, grad, out);
  return out;
}

}  // namespace

SingularMembersReport singular_members(const CubicPencil& pencil) {
  SingularMembersReport report;
  const Poly3& h1 = pencil.h1().poly().poly();
  const Poly3& h2 = pencil.h2().poly().poly();
  const Gradients grad{{h1.derivative(0), h1.derivative(1), h1.derivative(2)},
                       {h2.derivative(0), h2.derivative(1), h2.derivative(2)}};
  const auto& g1 = grad.g1;
  const auto& g2 = grad.g2;
  std::vector<Poly3> minors;
  for (const auto& m : {g1[1] * g2[2] - g1[2] * g2[1], g1[2] * g2[0] - g1[0] * g2[2], g1[0] * g2[1] - g1[1] * g2[0]})
    if (!m.is_zero()) minors.push_back(m);
  if (minors.empty()) throw Error(Error::Kind::InvalidPencil, "pencil generators are proportional");

  MemberSet members;

  // A curve in the locus where the gradients are parallel is a component
  // along which one member is singular, or else every member is singular.
  Poly3 common = minors[0];
  for (std::size_t i = 1; i < minors.size(); ++i) common = form_gcd(common, minors[i]);
  if (common.total_degree() > 0) {
    report.positive_dimensional = true;
    const std::array<Poly3, 3> lines{line_form(1, 3, -2), line_form(2, -1, 5), line_form(-3, 4, 1)};
    std::vector<MemberSet> sections;
    for (const auto& l : lines)
      if (auto m = members_along(common, l, grad)) sections.push_back(std::move(*m));
    if (sections.size() >= 2 && sections[0] == sections[1]) {
      members = sections[0];
    } else {
      report.every_member_singular = !smooth_member_exists(pencil);
      if (!sections.empty()) {
        members = sections[0];
        for (std::size_t i = 1; i < sections.size(); ++i) members = members.intersect(sections[i]);
      }
    }
    for (auto& m : minors) m = form_div(m, common);
  }

  // The remaining locus is finite; cut it out with two combinations of the
  // minors.
  bool finite_part = true;
  for (const auto& m : minors) finite_part &= m.total_degree() > 0;
  minors.resize(3);  // pad with zero forms
  if (finite_part) {
    std::optional<detail::ZeroSet> locus;
    const std::array<std::array<int, 4>, 4> combos{{{1, 2, 3, 1}, {2, -1, 1, 3}, {3, 1, -2, 2}, {1, -3, 2, -1}}};
    for (const auto& w : combos) {
      const Poly3 a = minors[0] + minors[1] * Rat(w[0]) + minors[2] * Rat(w[1]);
      const Poly3 b = minors[0] * Rat(w[2]) + minors[1] * Rat(w[3]) + minors[2];
      if (a.is_zero() || b.is_zero() || a.total_degree() != b.total_degree()) continue;
      auto z = detail::common_zeros(a, b);
      if (!z.common_factor) {
        locus = std::move(z);
        break;
      }
    }
    if (!locus) throw domain_error("singular member elimination failed");
    for (const auto& cluster : locus->clusters) {
      const UniPoly q = vanishing_part(cluster, minors);
      if (q.degree() > 0) collect_members(cluster.restricted(q), grad, members);
    }
  }
  if (members.common_singular_point) report.every_member_singular = true;

  for (const auto& [s, t] : members.rational) {
    SingularMember m{PencilParameter(s, t), {}, false};
    const PlaneCurve member = pencil.member(s, t);
    if (!is_reduced(member)) {
      m.non_reduced = true;
    } else {
      m.witness = singular_points(member);
      if (m.witness.empty()) continue;  // extraneous
    }
    report.members.push_back(std::move(m));
  }
  std::sort(members.irrational.begin(), members.irrational.end(), poly_less);
  for (auto& p : members.irrational) report.members.push_back({p, {}, false});
  return report;
}

bool smooth_member_exists(const CubicPencil& pencil) {
  // The singular members are the zeros of a binary form of degree 12, so 13
  // distinct members suffice.
  if (is_smooth(pencil.member(Rat(1), Rat(0))) || is_smooth(pencil.member(Rat(0), Rat(1)))) return true;
  for (int k = 1; k <= 11; ++k)
    if (is_smooth(pencil.member(Rat(1), Rat(k)))) return true;
  return false;
}

// ------------------------------------------------------------ cuspidal cubic

ProjPoint cusp_point(const Rat& u) { return ProjPoint(u, Rat(1), u * u * u); }

Rat cusp_parameter(const ProjPoint& p) {
  const Rat &x = p[0], &y = p[1], &z = p[2];
  if (y * y * z != x * x * x) throw domain_error("point " + p.to_string() + " is not on Y^2 Z = X^3");
  if (y == 0) throw domain_error("the cusp has no group parameter");
  return x / y;
}

bool cusp_collinear(const Rat& u1, const Rat& u2, const Rat& u3) { return u1 + u2 + u3 == 0; }

Rat ninth_base_parameter(std::span<const Rat> u) {
  if (u.size() != 8) throw domain_error("ninth base point needs 8 parameters");
  Rat s(0);
  for (const auto& v : u) s += v;
  return -s;
}

Rat manin_q_parameter(std::span<const Rat> u) {
  if (u.size() != 8) throw domain_error("Manin's point needs 8 parameters");
  Rat s(0);
  for (const auto& v : u) s += v;
  return s / 3;
}

}  // namespace cubicmw
