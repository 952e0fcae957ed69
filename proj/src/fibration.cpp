#include <cubicmw/fibration.hpp>
#include <cubicmw/parse.hpp>

#include <algorithm>
#include <map>

namespace cubicmw {

namespace {

Error not_elliptic() { return Error(Error::Kind::NotElliptic, "not an elliptic fibration: discriminant vanishes identically"); }

UniPoly one() { return UniPoly::constant(Rat(1)); }

// " + (a)*x*y" style term for printing a model.
std::string term(const UniPoly& a, const std::string& monomial) {
  if (a.is_zero()) return "";
  const std::string s = a.to_string();
  const bool single = a.coeffs().size() - static_cast<std::size_t>(std::count(a.coeffs().begin(), a.coeffs().end(), Rat(0))) == 1;
  if (monomial.empty()) return s[0] == '-' ? " - " + s.substr(1) : " + " + s;
  if (a == one()) return " + " + monomial;
  if (a == -one()) return " - " + monomial;
  if (single) return s[0] == '-' ? " - " + s.substr(1) + "*" + monomial : " + " + s + "*" + monomial;
  return " + (" + s + ")*" + monomial;
}

}  // namespace

WeierstrassModel::WeierstrassModel(UniPoly a1, UniPoly a2, UniPoly a3, UniPoly a4, UniPoly a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
  if (curve_invariants(*this).delta.is_zero()) throw not_elliptic();
}

WeierstrassModel WeierstrassModel::short_form(UniPoly a4, UniPoly a6) {
  return WeierstrassModel(UniPoly(), UniPoly(), UniPoly(), std::move(a4), std::move(a6));
}

int WeierstrassModel::infinity_weight() const {
  static constexpr int weights[5] = {1, 2, 3, 4, 6};
  int k = 0;
  for (std::size_t i = 0; i < 5; ++i)
    if (!a_[i].is_zero()) k = std::max(k, (a_[i].degree() + weights[i] - 1) / weights[i]);
  return k;
}

WeierstrassModel WeierstrassModel::at_infinity() const {
  static constexpr int weights[5] = {1, 2, 3, 4, 6};
  const int k = infinity_weight();
  std::array<UniPoly, 5> b;
  for (std::size_t i = 0; i < 5; ++i) {
    if (a_[i].is_zero()) continue;
    const int w = k * weights[i];
    b[i] = a_[i].reversed(a_[i].degree()) * UniPoly::monomial(Rat(1), w - a_[i].degree());
  }
  return WeierstrassModel(b[0], b[1], b[2], b[3], b[4]);
}

std::string WeierstrassModel::to_string() const {
  std::string lhs = "y^2" + term(a1(), "x*y") + term(a3(), "y");
  std::string rhs = "x^3" + term(a2(), "x^2") + term(a4(), "x") + term(a6(), "");
  return lhs + " = " + rhs;
}

WeierstrassModel parse_weierstrass(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw Error(Error::Kind::Parse, "expected exactly one '=' in the Weierstrass equation");
  const std::vector<std::string> vars{"x", "y", "t"};
  const Poly3 lhs = parse_polynomial(text.substr(0, eq), vars);
  Poly3 rhs;
  try {
    rhs = parse_polynomial(text.substr(eq + 1), vars);
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::Parse) throw;
    throw Error(Error::Kind::Parse, std::string("right-hand side: ") + e.what());
  }
  Poly3 f = lhs;
  for (const auto& [e, c] : rhs.terms()) f.add_term(e, -c);

  // f = c (y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6)
  std::map<std::pair<int, int>, std::vector<Rat>> parts;
  for (const auto& [e, c] : f.terms()) {
    auto& v = parts[{e[0], e[1]}];
    if (static_cast<int>(v.size()) <= e[2]) v.resize(static_cast<std::size_t>(e[2]) + 1);
    v[static_cast<std::size_t>(e[2])] = c;
  }
  auto coeff = [&](int ex, int ey) {
    auto it = parts.find({ex, ey});
    return it == parts.end() ? UniPoly() : UniPoly(it->second);
  };
  const UniPoly lead_y = coeff(0, 2), lead_x = coeff(3, 0);
  if (lead_y.degree() != 0 || lead_x != -lead_y)
    throw Error(Error::Kind::Parse, "not in long Weierstrass form: need y^2 and x^3 with matching constant coefficients");
  for (const auto& [key, v] : parts) {
    static const std::pair<int, int> allowed[] = {{0, 2}, {1, 1}, {0, 1}, {3, 0}, {2, 0}, {1, 0}, {0, 0}};
    if (std::find(std::begin(allowed), std::end(allowed), key) == std::end(allowed))
      throw Error(Error::Kind::Parse, "not in long Weierstrass form: unexpected monomial x^" + std::to_string(key.first) +
                                          "*y^" + std::to_string(key.second));
  }
  const Rat s = Rat(1) / lead_y.leading();
  return WeierstrassModel(coeff(1, 1) * s, -coeff(2, 0) * s, coeff(0, 1) * s, -coeff(1, 0) * s, -coeff(0, 0) * s);
}

CurveInvariants curve_invariants(const WeierstrassModel& m) {
  CurveInvariants v;
  const UniPoly &a1 = m.a1(), &a2 = m.a2(), &a3 = m.a3(), &a4 = m.a4(), &a6 = m.a6();
  v.b2 = a1 * a1 + Rat(4) * a2;
  v.b4 = Rat(2) * a4 + a1 * a3;
  v.b6 = a3 * a3 + Rat(4) * a6;
  v.b8 = a1 * a1 * a6 + Rat(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  v.c4 = v.b2 * v.b2 - Rat(24) * v.b4;
  v.c6 = -(v.b2 * v.b2 * v.b2) + Rat(36) * v.b2 * v.b4 - Rat(216) * v.b6;
  v.delta = -(v.b2 * v.b2 * v.b8) - Rat(8) * v.b4 * v.b4 * v.b4 - Rat(27) * v.b6 * v.b6 + Rat(9) * v.b2 * v.b4 * v.b6;
  return v;
}

int ValuationSignature::minimalize() {
  int steps = 0;
  while ((!c4 || *c4 >= 4) && (!c6 || *c6 >= 6) && delta >= 12) {
    if (c4) *c4 -= 4;
    if (c6) *c6 -= 6;
    delta -= 12;
    ++steps;
  }
  return steps;
}

std::string ValuationSignature::to_string() const {
  auto s = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  return "(" + s(c4) + ", " + s(c6) + ", " + std::to_string(delta) + ")";
}

std::vector<PlaceSignature> place_clusters(const WeierstrassModel& m) {
  const CurveInvariants inv = curve_invariants(m);
  std::vector<PlaceSignature> out;
  for (const auto& [factor, mult] : squarefree_decomposition(inv.delta)) {
    std::vector<std::pair<UniPoly, std::optional<int>>> by_c4;
    if (inv.c4.is_zero())
      by_c4.emplace_back(factor, std::nullopt);
    else
      for (const auto& [piece, v] : valuation_split(factor, inv.c4)) by_c4.emplace_back(piece, v);
    for (const auto& [piece, v4] : by_c4) {
      if (inv.c6.is_zero()) {
        out.push_back({PlaceCluster::finite(piece), {v4, std::nullopt, mult}});
        continue;
      }
      for (const auto& [sub, v6] : valuation_split(piece, inv.c6))
        out.push_back({PlaceCluster::finite(sub), {v4, v6, mult}});
    }
  }
  std::sort(out.begin(), out.end(), [](const PlaceSignature& a, const PlaceSignature& b) { return a.place < b.place; });

  const int k = m.infinity_weight();
  const int d_inf = 12 * k - inv.delta.degree();
  if (d_inf > 0) {
    auto at_inf = [](const UniPoly& f, int w) -> std::optional<int> {
      if (f.is_zero()) return std::nullopt;
      return w - f.degree();
    };
    out.push_back({PlaceCluster::infinity(), {at_inf(inv.c4, 4 * k), at_inf(inv.c6, 6 * k), d_inf}});
  }
  return out;
}

std::string KodairaFiber::name() const {
  switch (type) {
    case KodairaType::I0: return "I0";
    case KodairaType::In: return "I" + std::to_string(n);
    case KodairaType::II: return "II";
    case KodairaType::III: return "III";
    case KodairaType::IV: return "IV";
    case KodairaType::I0star: return "I0*";
    case KodairaType::Instar: return "I" + std::to_string(n) + "*";
    case KodairaType::IVstar: return "IV*";
    case KodairaType::IIIstar: return "III*";
    case KodairaType::IIstar: return "II*";
  }
  return "?";
}

Rat KodairaFiber::contribution(int index, bool far) const {
  switch (type) {
    case KodairaType::In:
      if (index <= 0 || index >= n) throw domain_error("no such component of " + name());
      return make_rat(index * (n - index), n);
    case KodairaType::III: return make_rat(1, 2);
    case KodairaType::IV: return make_rat(2, 3);
    case KodairaType::I0star: return Rat(1);
    case KodairaType::Instar: return far ? Rat(1) + make_rat(n, 4) : Rat(1);
    case KodairaType::IVstar: return make_rat(4, 3);
    case KodairaType::IIIstar: return make_rat(3, 2);
    default: throw domain_error(name() + " has no non-identity simple component");
  }
}

KodairaFiber kodaira_classify(ValuationSignature s) {
  s.minimalize();
  const auto at_least = [](const std::optional<int>& v, int k) { return !v || *v >= k; };
  const auto exactly = [](const std::optional<int>& v, int k) { return v && *v == k; };
  const auto inconsistent = [&] { return domain_error("inconsistent valuations " + s.to_string()); };
  KodairaFiber f;
  auto set = [&](KodairaType type, int e, int m, std::optional<RootLatticeId> t) {
    f.type = type;
    f.euler = e;
    f.components = m;
    f.t_lattice = t;
  };
  using RF = RootFamily;
  if (s.delta < 0) throw inconsistent();
  if (s.delta == 0) {
    if (!exactly(s.c4, 0) && !exactly(s.c6, 0)) throw inconsistent();
    return f;
  }
  if (exactly(s.c4, 0)) {
    if (!exactly(s.c6, 0)) throw inconsistent();
    f.n = s.delta;
    set(KodairaType::In, s.delta, s.delta, s.delta >= 2 ? std::optional(RootLatticeId(RF::A, s.delta - 1)) : std::nullopt);
    return f;
  }
  const int d = s.delta;
  if (d == 2 && at_least(s.c4, 1) && exactly(s.c6, 1))
    set(KodairaType::II, 2, 1, std::nullopt);
  else if (d == 3 && exactly(s.c4, 1) && at_least(s.c6, 2))
    set(KodairaType::III, 3, 2, RootLatticeId(RF::A, 1));
  else if (d == 4 && at_least(s.c4, 2) && exactly(s.c6, 2))
    set(KodairaType::IV, 4, 3, RootLatticeId(RF::A, 2));
  else if (d == 6 && at_least(s.c4, 2) && at_least(s.c6, 3))
    set(KodairaType::I0star, 6, 5, RootLatticeId(RF::D, 4));
  else if (d > 6 && exactly(s.c4, 2) && exactly(s.c6, 3)) {
    f.n = d - 6;
    set(KodairaType::Instar, d, f.n + 5, RootLatticeId(RF::D, f.n + 4));
  } else if (d == 8 && at_least(s.c4, 3) && exactly(s.c6, 4))
    set(KodairaType::IVstar, 8, 7, RootLatticeId(RF::E, 6));
  else if (d == 9 && exactly(s.c4, 3) && at_least(s.c6, 5))
    set(KodairaType::IIIstar, 9, 8, RootLatticeId(RF::E, 7));
  else if (d == 10 && at_least(s.c4, 4) && exactly(s.c6, 5))
    set(KodairaType::IIstar, 10, 9, RootLatticeId(RF::E, 8));
  else
    throw inconsistent();
  return f;
}

int FiberConfiguration::euler_total() const {
  int e = 0;
  for (const auto& f : fibers) e += f.place.point_count() * f.fiber.euler;
  return e;
}

FiberConfiguration fiber_configuration(const WeierstrassModel& m) {
  FiberConfiguration cfg;
  for (const auto& [place, sig] : place_clusters(m)) {
    ValuationSignature minimal = sig;
    const int shift = minimal.minimalize();
    KodairaFiber fiber = kodaira_classify(minimal);
    if (fiber.euler == 0) continue;
    cfg.fibers.push_back({place, sig, shift, std::move(fiber)});
  }
  const int e = cfg.euler_total();
  if (e != 12 * cfg.chi)
    throw Error(Error::Kind::InconsistentSurface,
                "not a rational elliptic surface under chi = 1 assumptions (Euler number " + std::to_string(e) + ")");
  return cfg;
}

int shioda_tate_rank(const FiberConfiguration& cfg) {
  int r = cfg.rho - 2;
  for (const auto& f : cfg.fibers) r -= f.place.point_count() * (f.fiber.components - 1);
  if (r < 0) throw Error(Error::Kind::InconsistentSurface, "inconsistent configuration: negative rank");
  return r;
}

namespace {

int family_order(RootFamily f) { return f == RootFamily::E ? 0 : f == RootFamily::D ? 1 : 2; }

bool canonical_less(const RootLatticeId& a, const RootLatticeId& b) {
  if (a.family != b.family) return family_order(a.family) < family_order(b.family);
  return a.rank > b.rank;
}

}  // namespace

std::vector<RootLatticeId> trivial_lattice(const FiberConfiguration& cfg) {
  std::vector<RootLatticeId> t;
  for (const auto& f : cfg.fibers)
    if (f.fiber.t_lattice)
      for (int i = 0; i < f.place.point_count(); ++i) t.push_back(*f.fiber.t_lattice);
  std::sort(t.begin(), t.end(), canonical_less);
  return t;
}

std::string lattice_symbol(const std::vector<RootLatticeId>& t) {
  std::vector<RootLatticeId> s = t;
  std::sort(s.begin(), s.end(), canonical_less);
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += "+";
    out += s[i].to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string MWGroupDescriptor::lattice() const {
  if (lattice_parts.empty()) return "0";
  std::string out;
  for (const auto& p : lattice_parts) out += (out.empty() ? "" : "+") + p.to_string();
  return out;
}

MWGroupDescriptor identify_mw(std::vector<RootLatticeId> t) {
  struct Row {
    const char* trivial;
    const char* lattice;  // "+"-separated dual lattices, "" for 0
    std::vector<int> torsion;
  };
  static const std::vector<Row> table = {
      {"0", "E8", {}},
      {"A1", "E7v", {}},
      {"A2", "E6v", {}},
      {"A1^2", "D6v", {}},
      {"A3", "D5v", {}},
      {"A2+A1", "A5v", {}},
      {"A1^3", "D4v+A1v", {}},
      {"A4", "A4v", {}},
      {"D4", "D4v", {}},
      {"A3+A1", "A3v+A1v", {}},
      {"A2^2", "A2v+A2v", {}},
      {"D4+A1", "A1v+A1v+A1v", {}},
      {"D5", "A3v", {}},
      {"A5", "A2v+A1v", {}},
      {"D6", "A1v+A1v", {}},
      {"E6", "A2v", {}},
      {"E7", "A1v", {}},
      {"E8", "", {}},
      {"A8", "", {3}},
      {"D8", "", {2}},
      {"E7+A1", "", {2}},
      {"A5+A2+A1", "", {6}},
      {"A4^2", "", {5}},
      {"D5+A3", "", {4}},
      {"E6+A2", "", {3}},
      {"A7+A1", "", {4}},
      {"D6+A1^2", "", {2, 2}},
      {"D4^2", "", {2, 2}},
      {"A3^2+A1^2", "", {2, 4}},
      {"A2^4", "", {3, 3}},
  };
  const std::string key = lattice_symbol(t);
  for (const auto& row : table) {
    if (key != row.trivial) continue;
    MWGroupDescriptor d;
    std::string_view rest = row.lattice;
    while (!rest.empty()) {
      const auto plus = rest.find('+');
      d.lattice_parts.push_back(LatticeName::parse(rest.substr(0, plus)));
      d.rank += d.lattice_parts.back().id.rank;
      rest = plus == std::string_view::npos ? std::string_view() : rest.substr(plus + 1);
    }
    for (int f : row.torsion) d.torsion.invariant_factors.emplace_back(f);
    return d;
  }
  throw Error(Error::Kind::Unsupported, "trivial lattice " + key + " is not in the embedded classification table");
}

// Sections and heights.

namespace {

RatFunc lift(const UniPoly& p) { return RatFunc(p); }

RatFunc psi2(const Section& p, const WeierstrassModel& m) {
  return Rat(2) * p.y() + lift(m.a1()) * p.x() + lift(m.a3());
}

// The section in the chart at infinity of the model.
Section section_at_infinity(const Section& p, int k) {
  if (p.is_zero()) return p;
  return Section(p.x().at_infinity(2 * k), p.y().at_infinity(3 * k));
}

void require_on_curve(const Section& p, const WeierstrassModel& m) {
  if (!on_curve(p, m)) throw domain_error("section is not on the model");
}

// Order at a place, with nullopt for the zero function read as +infinity.
std::optional<int> ord(const RatFunc& f, const PlaceCluster& v) { return f.order_at(v); }
bool positive(const std::optional<int>& o) { return !o || *o > 0; }

// Split monic squarefree clusters so that f has one valuation on each piece.
std::vector<UniPoly> refine(const std::vector<UniPoly>& clusters, const RatFunc& f) {
  if (f.is_zero()) return clusters;
  std::vector<UniPoly> out;
  for (const auto& c : clusters)
    for (const auto& [a, va] : valuation_split(c, f.num()))
      for (const auto& [b, vb] : valuation_split(a, f.den())) out.push_back(b);
  return out;
}

void require_minimal(const WeierstrassModel& m) {
  for (auto [place, sig] : place_clusters(m))
    if (sig.minimalize() > 0)
      throw Error(Error::Kind::Unsupported, "heights need a model that is minimal at every place; not minimal at " +
                                                place.to_string());
}

// Local intersection number at a finite place where the valuations of all
// functions involved are uniform.
int local_intersection(const Section& p, const Section& q, const WeierstrassModel& m, const PlaceCluster& v) {
  const auto oxp = ord(p.x(), v), oxq = ord(q.x(), v);
  const bool pole_p = oxp && *oxp < 0, pole_q = oxq && *oxq < 0;
  if (pole_p != pole_q) return 0;
  if (pole_p) {
    const auto o = ord(p.x() / p.y() - q.x() / q.y(), v);
    if (!o) throw domain_error("sections coincide");
    return *o;
  }
  const auto odx = ord(p.x() - q.x(), v), ody = ord(p.y() - q.y(), v);
  if (!positive(odx) || !positive(ody)) return 0;
  const auto o = ord(psi2(p, m), v);
  const auto local = o && *o == 0 ? odx : ody;
  if (!local) throw domain_error("sections coincide");
  return *local;
}

std::vector<UniPoly> meeting_candidates(const Section& p, const Section& q) {
  UniPoly c = p.x().den() * q.x().den();
  const RatFunc dx = p.x() - q.x();
  c = c * (dx.is_zero() ? (p.y() - q.y()).num() : dx.num());
  if (c.degree() <= 0) return {};
  std::vector<UniPoly> out{squarefree_part(c).monic()};
  for (const RatFunc& f : {p.x(), q.x(), dx, p.y() - q.y()}) out = refine(out, f);
  if (!p.y().is_zero() && !q.y().is_zero()) out = refine(out, p.x() / p.y() - q.x() / q.y());
  return out;
}

}  // namespace

bool on_curve(const Section& p, const WeierstrassModel& m) {
  if (p.is_zero()) return true;
  const RatFunc &x = p.x(), &y = p.y();
  const RatFunc lhs = y * y + lift(m.a1()) * x * y + lift(m.a3()) * y;
  const RatFunc rhs = x * x * x + lift(m.a2()) * x * x + lift(m.a4()) * x + lift(m.a6());
  return lhs == rhs;
}

Section negate(const Section& p, const WeierstrassModel& m) {
  if (p.is_zero()) return p;
  return Section(p.x(), -p.y() - lift(m.a1()) * p.x() - lift(m.a3()));
}

Section add(const Section& p, const Section& q, const WeierstrassModel& m) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const RatFunc a1 = lift(m.a1()), a2 = lift(m.a2()), a3 = lift(m.a3()), a4 = lift(m.a4()), a6 = lift(m.a6());
  RatFunc lambda, nu;
  if (p.x() == q.x()) {
    const RatFunc denom = p.y() + q.y() + a1 * q.x() + a3;
    if (denom.is_zero()) return Section();
    const RatFunc &x = p.x(), &y = p.y();
    const RatFunc d = Rat(2) * y + a1 * x + a3;
    lambda = (Rat(3) * x * x + Rat(2) * a2 * x + a4 - a1 * y) / d;
    nu = (-(x * x * x) + a4 * x + Rat(2) * a6 - a3 * y) / d;
  } else {
    const RatFunc dx = q.x() - p.x();
    lambda = (q.y() - p.y()) / dx;
    nu = (p.y() * q.x() - q.y() * p.x()) / dx;
  }
  const RatFunc x3 = lambda * lambda + a1 * lambda - a2 - p.x() - q.x();
  return Section(x3, -(lambda + a1) * x3 - nu - a3);
}

int intersection_with_zero(const Section& p, const WeierstrassModel& m) {
  if (p.is_zero()) throw domain_error("(O, O) is the self-intersection -1, not a meeting count");
  require_on_curve(p, m);
  int total = 0;
  if (p.x().den().degree() > 0)
    for (const auto& [factor, mult] : squarefree_decomposition(p.x().den())) {
      if (mult % 2 != 0) throw domain_error("odd pole order of x");
      total += mult / 2 * factor.degree();
    }
  const auto o_inf = p.x().at_infinity(2 * m.infinity_weight()).order_at(PlaceCluster::finite(UniPoly::variable()));
  if (o_inf && *o_inf < 0) {
    const int o = *o_inf;
    if (o % 2 != 0) throw domain_error("odd pole order of x");
    total += -o / 2;
  }
  return total;
}

int section_intersection(const Section& p, const Section& q, const WeierstrassModel& m) {
  if (p.is_zero() && q.is_zero()) throw domain_error("(O, O) is not a meeting count");
  if (p.is_zero()) return intersection_with_zero(q, m);
  if (q.is_zero()) return intersection_with_zero(p, m);
  require_on_curve(p, m);
  require_on_curve(q, m);
  if (p == q) throw domain_error("sections coincide");
  int total = 0;
  // psi2 only enters through its valuation; refine against the real one.
  for (const auto& c : refine(meeting_candidates(p, q), psi2(p, m))) {
    const PlaceCluster v = PlaceCluster::finite(c);
    total += c.degree() * local_intersection(p, q, m, v);
  }
  const int k = m.infinity_weight();
  const WeierstrassModel mi = m.at_infinity();
  total += local_intersection(section_at_infinity(p, k), section_at_infinity(q, k), mi,
                              PlaceCluster::finite(UniPoly::variable()));
  return total;
}

std::vector<ComponentHit> components_met(const Section& p, const WeierstrassModel& m, const FiberConfiguration& cfg) {
  require_on_curve(p, m);
  std::vector<ComponentHit> hits;
  if (p.is_zero()) {
    for (std::size_t i = 0; i < cfg.fibers.size(); ++i)
      if (cfg.fibers[i].fiber.components > 1) hits.push_back({i, true, 0, Rat(0)});
    return hits;
  }
  const int k = m.infinity_weight();
  for (std::size_t i = 0; i < cfg.fibers.size(); ++i) {
    const FiberEntry& e = cfg.fibers[i];
    if (e.fiber.components <= 1) continue;
    if (e.minimal_shift > 0)
      throw Error(Error::Kind::Unsupported, "component data needs a model minimal at " + e.place.to_string());
    const bool inf = e.place.is_infinity();
    const WeierstrassModel lm = inf ? m.at_infinity() : m;
    const Section lp = inf ? section_at_infinity(p, k) : p;
    const UniPoly cluster = inf ? UniPoly::variable() : e.place.defining_poly();
    const RatFunc f_x = Rat(3) * lp.x() * lp.x() + Rat(2) * lift(lm.a2()) * lp.x() + lift(lm.a4()) - lift(lm.a1()) * lp.y();
    const RatFunc g = psi2(lp, lm);
    std::vector<UniPoly> pieces = refine(refine(refine({cluster}, lp.x()), f_x), g);
    if (pieces.size() > 1)
      throw Error(Error::Kind::Unsupported, "section behaves differently across the cluster " + e.place.to_string());
    const PlaceCluster v = PlaceCluster::finite(cluster);
    ComponentHit hit{i, true, 0, Rat(0)};
    const auto ox = ord(lp.x(), v);
    // A section through the singular point of the reduced curve meets a
    // non-identity component.
    if (!(ox && *ox < 0) && positive(ord(f_x, v)) && positive(ord(g, v))) {
      hit.identity = false;
      switch (e.fiber.type) {
        case KodairaType::In: {
          const auto o = ord(g, v);
          hit.index = std::min(o ? *o : e.fiber.n, e.fiber.n / 2);
          hit.contribution = e.fiber.contribution(hit.index);
          break;
        }
        case KodairaType::Instar:
          throw Error(Error::Kind::Unsupported, "near and far components of " + e.fiber.name() + " are not distinguished");
        default:
          hit.index = 1;
          hit.contribution = e.fiber.contribution();
      }
    }
    hits.push_back(hit);
  }
  return hits;
}

namespace {

Rat self_height(const Section& p, const WeierstrassModel& m, const FiberConfiguration& cfg) {
  if (p.is_zero()) return Rat(0);
  Rat h = Rat(2 * cfg.chi + 2 * intersection_with_zero(p, m));
  for (const auto& hit : components_met(p, m, cfg))
    h -= hit.contribution * cfg.fibers[hit.fiber_index].place.point_count();
  return h;
}

}  // namespace

Rat height_pairing(const Section& p, const Section& q, const WeierstrassModel& m, const FiberConfiguration& cfg) {
  require_on_curve(p, m);
  require_on_curve(q, m);
  require_minimal(m);
  if (p == q) return self_height(p, m, cfg);
  if (p.is_zero() || q.is_zero()) return Rat(0);
  const Rat sum = self_height(add(p, q, m), m, cfg);
  return (sum - self_height(p, m, cfg) - self_height(q, m, cfg)) / 2;
}

bool narrow_membership(const Section& p, const WeierstrassModel& m, const FiberConfiguration& cfg) {
  for (const auto& hit : components_met(p, m, cfg))
    if (!hit.identity) return false;
  return true;
}

bool is_integral_section(const Section& p) {
  if (p.is_zero()) return false;
  return p.x().is_polynomial() && p.y().is_polynomial() && p.x().num().degree() <= 2 && p.y().num().degree() <= 3;
}

}  // namespace cubicmw
