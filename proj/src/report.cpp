#include <cubicmw/report.hpp>

#include <sstream>

namespace cubicmw {

using nlohmann::json;

namespace {

json rat_array(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json matrix_json(const GramMatrix& g) {
  json out = json::array();
  for (const auto& row : g.entries()) out.push_back(rat_array(row));
  return out;
}

json fiber_json(const FiberEntry& f) {
  json out;
  out["place"] = f.place.to_string();
  out["count"] = f.place.point_count();
  out["type"] = f.fiber.name();
  out["e"] = f.fiber.euler;
  out["m"] = f.fiber.components;
  out["T"] = f.fiber.t_lattice ? json(f.fiber.t_lattice->to_string()) : json(nullptr);
  out["valuations"] = f.signature.to_string();
  out["minimal_shift"] = f.minimal_shift;
  return out;
}

json singular_point_json(const SingularPoint& s) {
  json out;
  out["point"] = locus_to_string(s.locus);
  out["count"] = locus_size(s.locus);
  out["type"] = s.type ? json(to_string(*s.type)) : json(nullptr);
  return out;
}

json singular_member_json(const SingularMember& m) {
  json out;
  if (const auto* p = std::get_if<PencilParameter>(&m.parameter)) {
    out["parameter"] = p->to_string();
    out["mu_poly"] = nullptr;
  } else {
    out["parameter"] = "[1:mu]";
    out["mu_poly"] = std::get<UniPoly>(m.parameter).to_string('u');
  }
  out["count"] = m.size();
  out["non_reduced"] = m.non_reduced;
  out["singular_points"] = json::array();
  for (const auto& w : m.witness) out["singular_points"].push_back(singular_point_json(w));
  return out;
}

void render(std::ostringstream& os, const json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string key = v.is_object() ? it.key() : "-";
    const json& x = *it;
    if (x.is_structured() && !x.empty()) {
      // short arrays of scalars stay on one line
      bool flat = x.is_array() && x.size() <= 12;
      for (const auto& e : x)
        if (e.is_structured()) flat = false;
      if (flat) {
        os << pad << key << ": " << x.dump() << '\n';
      } else {
        os << pad << key << ":\n";
        render(os, x, depth + 1);
      }
    } else if (x.is_string()) {
      os << pad << key << ": " << x.get<std::string>() << '\n';
    } else {
      os << pad << key << ": " << x.dump() << '\n';
    }
  }
}

}  // namespace

json fibration_report(const WeierstrassModel& m) {
  const CurveInvariants inv = curve_invariants(m);
  const FiberConfiguration cfg = fiber_configuration(m);
  json out;
  out["model"] = m.to_string();
  out["invariants"] = {{"c4", inv.c4.to_string()}, {"c6", inv.c6.to_string()}, {"delta", inv.delta.to_string()}};
  out["fibers"] = json::array();
  for (const auto& f : cfg.fibers) out["fibers"].push_back(fiber_json(f));
  out["euler_total"] = cfg.euler_total();
  out["rank"] = shioda_tate_rank(cfg);
  const auto t = trivial_lattice(cfg);
  out["trivial_lattice"] = lattice_symbol(t);
  try {
    const MWGroupDescriptor mw = identify_mw(t);
    out["mw_group"] = {{"lattice", mw.lattice()}, {"torsion", mw.torsion.to_string()}, {"rank", mw.rank}};
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::Unsupported) throw;
    out["mw_group"] = nullptr;
    out["mw_group_note"] = e.what();
  }
  return out;
}

json pencil_report(const CubicPencil& pencil, const std::optional<ProjPoint>& base) {
  json out;
  out["h1"] = pencil.h1().to_string();
  out["h2"] = pencil.h2().to_string();

  const auto bps = base_points(pencil);
  out["base_points"] = json::array();
  int total = 0;
  std::vector<ProjPoint> simple_rational;
  for (const auto& b : bps) {
    out["base_points"].push_back({{"point", locus_to_string(b.locus)},
                                  {"count", locus_size(b.locus)},
                                  {"multiplicity", b.multiplicity},
                                  {"simple", b.simple}});
    total += locus_size(b.locus) * b.multiplicity;
    if (b.simple && std::holds_alternative<ProjPoint>(b.locus)) simple_rational.push_back(std::get<ProjPoint>(b.locus));
  }
  out["base_point_total"] = total;

  const GeneralPositionReport gp = general_position(simple_rational);
  json pts = json::array();
  for (const auto& p : simple_rational) pts.push_back(p.to_string());
  out["general_position"] = {{"points", pts},
                             {"collinear", gp.collinear},
                             {"on_conic", gp.on_conic},
                             {"in_general_position", gp.in_general_position()}};

  out["irreducible"] = {{"h1", is_absolutely_irreducible(pencil.h1())},
                        {"h2", is_absolutely_irreducible(pencil.h2())}};

  const SingularMembersReport sm = singular_members(pencil);
  json members = json::array();
  for (const auto& m : sm.members) members.push_back(singular_member_json(m));
  out["singular_members"] = {{"members", members},
                             {"every_member_singular", sm.every_member_singular},
                             {"positive_dimensional", sm.positive_dimensional}};

  if (base) {
    json fib = fibration_report(cubic_to_weierstrass(pencil, *base));
    fib["base_point"] = base->to_string();
    out["fibration"] = std::move(fib);
  }
  return out;
}

json family_report(Family f, const std::vector<Rat>& coefficients) {
  const std::string label = family_lattice(f);
  const std::string generic_t = label == "E8" ? "0" : label == "E7v" ? "A1" : "A2";
  json out;
  out["family"] = to_string(f);
  out["coefficients"] = rat_array(coefficients);
  out["expected_lattice"] = label;
  out["expected_trivial_lattice"] = generic_t;
  out["matches_label"] = nullptr;
  // Special members may fail to be rational elliptic surfaces at all; those
  // are reported as degenerations rather than errors.
  try {
    json fib = fibration_report(instantiate_family(f, coefficients));
    const std::string t = fib["trivial_lattice"];
    out["degenerate"] = t != generic_t;
    if (t != generic_t)
      out["degeneration"] = "trivial lattice " + t + " instead of " + generic_t + ", rank " +
                            std::to_string(fib["rank"].get<int>());
    else
      out["matches_label"] = fib["mw_group"].is_object() && fib["mw_group"]["lattice"] == label;
    out["fibration"] = std::move(fib);
  } catch (const Error& e) {
    if (e.kind() != Error::Kind::NotElliptic && e.kind() != Error::Kind::InconsistentSurface) throw;
    out["degenerate"] = true;
    out["degeneration"] = e.what();
    out["fibration"] = nullptr;
  }
  return out;
}

json lattice_report(const LatticeName& name, const std::optional<Rat>& minimal_norm, bool list_vectors) {
  const GramMatrix g = lattice_gram(name);
  json out;
  out["lattice"] = name.to_string();
  out["rank"] = g.rank();
  out["gram"] = matrix_json(g);
  out["dual_gram"] = matrix_json(dual_gram(g));
  out["determinant"] = to_string(g.determinant());
  out["integral"] = g.is_integral();
  out["discriminant_group"] = g.is_integral() ? json(discriminant_group(g).to_string()) : json(nullptr);
  if (minimal_norm) {
    const auto vs = minimal_vectors(g, *minimal_norm);
    json mv = {{"norm", to_string(*minimal_norm)}, {"count", vs.size()}};
    if (list_vectors) {
      mv["vectors"] = json::array();
      for (const auto& v : vs) mv["vectors"].push_back(rat_array(v.coords));
    }
    out["minimal_vectors"] = std::move(mv);
  }
  return out;
}

json delpezzo_report(int m, bool list_classes) {
  const auto cs = minus_one_classes(m);
  json out;
  out["m"] = m;
  out["degree"] = degree(m);
  out["count"] = cs.size();
  if (m >= 6) {
    out["lattice_count"] = lattice_count(m);
    out["cross_validated"] = cross_validate_counts(m);
  }
  if (list_classes) {
    out["classes"] = json::array();
    for (const auto& c : cs) out["classes"].push_back({{"a", c.a}, {"b", c.b}});
  }
  return out;
}

std::string render_summary(const json& report) {
  std::ostringstream os;
  if (report.is_structured())
    render(os, report, 0);
  else
    os << (report.is_string() ? report.get<std::string>() : report.dump()) << '\n';
  return os.str();
}

}  // namespace cubicmw
