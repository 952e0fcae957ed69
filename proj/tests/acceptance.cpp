// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 all criteria, exit 1 if any fails
//   acceptance --criterion N   a single criterion

#include <cubicmw/delpezzo.hpp>
#include <cubicmw/families.hpp>
#include <cubicmw/fibration.hpp>
#include <cubicmw/lattices.hpp>
#include <cubicmw/parse.hpp>
#include <cubicmw/plane_curves.hpp>
#include <cubicmw/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace cubicmw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
  void within(Clock::time_point start, double limit, const std::string& what) {
    const double s = seconds_since(start);
    require(s < limit, what + " took " + std::to_string(s) + " s, limit " + std::to_string(limit) + " s");
  }
};

Rat rnd_rat(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  return make_rat(num(rng), den(rng));
}

UniPoly rnd_poly(std::mt19937& rng, int degree, int range = 3) {
  std::vector<Rat> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rnd_rat(rng, range));
  return UniPoly(std::move(c));
}

ProjPoint pt(long a, long b, long c) { return ProjPoint(Rat(a), Rat(b), Rat(c)); }

RatMatrix rows(std::initializer_list<std::initializer_list<const char*>> r) {
  RatMatrix m;
  for (const auto& row : r) {
    m.emplace_back();
    for (const char* e : row) m.back().push_back(parse_rat(e));
  }
  return m;
}

// ---------------------------------------------------------------------------

void lattice_counts(Outcome& o) {
  const struct {
    const char* name;
    const char* norm;
    std::size_t expected;
  } cases[] = {{"E8", "2", 240}, {"E7v", "3/2", 56}, {"E6v", "4/3", 27}};
  for (const auto& c : cases) {
    const auto start = Clock::now();
    const auto vs = minimal_vectors(lattice_gram(LatticeName::parse(c.name)), parse_rat(c.norm));
    o.within(start, 5, c.name);
    o.detail << c.name << "@" << c.norm << "=" << vs.size() << " ";
    if (vs.size() != c.expected) {
      std::set<RatVector> classes;
      for (const auto& v : vs) {
        RatVector neg = v.coords;
        for (auto& x : neg) x = -x;
        classes.insert(std::min(v.coords, neg));
      }
      o.require(false, std::string(c.name) + " expected " + std::to_string(c.expected) + ", found " +
                           std::to_string(vs.size()) + " (" + std::to_string(classes.size()) + " up to sign)");
    }
  }
}

void delpezzo_counts(Outcome& o) {
  const auto start = Clock::now();
  const std::pair<int, std::size_t> expected[] = {{8, 240}, {7, 56}, {6, 27}};
  for (const auto& [m, n] : expected) {
    const std::size_t found = minus_one_classes(m).size();
    o.detail << "m=" << m << ":" << found << " ";
    o.require(found == n, "m=" + std::to_string(m) + " expected " + std::to_string(n));
    const bool cv = cross_validate_counts(m);
    o.require(cv, "cross_validate_counts(" + std::to_string(m) + ") is false (lattice count " +
                      std::to_string(lattice_count(m)) + ")");
  }
  o.within(start, 5, "del Pezzo counts");
}

void matrix_oracle(Outcome& o) {
  const GramMatrix g = root_gram(RootLatticeId(RootFamily::E, 7));
  const RatMatrix printed_g = rows({{"2", "-1", "0", "0", "0", "0", "0"},
                                    {"-1", "2", "-1", "0", "0", "0", "0"},
                                    {"0", "-1", "2", "-1", "0", "0", "-1"},
                                    {"0", "0", "-1", "2", "-1", "0", "0"},
                                    {"0", "0", "0", "-1", "2", "-1", "0"},
                                    {"0", "0", "0", "0", "-1", "2", "0"},
                                    {"0", "0", "-1", "0", "0", "0", "2"}});
  const RatMatrix printed_dual = rows({{"2", "3", "4", "3", "2", "1", "2"},
                                       {"3", "6", "8", "6", "4", "2", "4"},
                                       {"4", "8", "12", "9", "6", "3", "6"},
                                       {"3", "6", "9", "15/2", "5", "5/2", "9/2"},
                                       {"2", "4", "6", "5", "4", "2", "3"},
                                       {"1", "2", "3", "5/2", "2", "3/2", "3/2"},
                                       {"2", "4", "6", "9/2", "3", "3/2", "7/2"}});
  const GramMatrix d = dual_gram(g);
  o.require(g.entries() == printed_g, "root Gram differs");
  o.require(d(3, 3) == make_rat(15, 2), "G'(4,4)");
  o.require(d(5, 5) == make_rat(3, 2), "G'(6,6)");
  o.require(d(6, 6) == make_rat(7, 2), "G'(7,7)");
  o.require(d.entries() == printed_dual, "dual Gram differs");
  o.detail << "G'(4,4)=" << d(3, 3) << " G'(6,6)=" << d(5, 5) << " G'(7,7)=" << d(6, 6);
}

void special_fibrations(Outcome& o) {
  const std::pair<const char*, std::size_t> cases[] = {{"y^2 = x^3 + t^5", 2}, {"y^2 = x^3 + x*t^3 + t^4", 3}};
  for (const auto& [eq, n] : cases) {
    const auto start = Clock::now();
    const auto cfg = fiber_configuration(parse_weierstrass(eq));
    o.within(start, 1, eq);
    std::size_t fibers = 0;
    for (const auto& f : cfg.fibers) fibers += static_cast<std::size_t>(f.place.point_count());
    o.require(fibers == n, std::string(eq) + " has " + std::to_string(fibers) + " singular fibers");
    o.require(cfg.euler_total() == 12, std::string(eq) + " Euler sum " + std::to_string(cfg.euler_total()));
    o.detail << "'" << eq << "': " << fibers << " fibers, e=" << cfg.euler_total() << "; ";
  }
}

// Full pipeline from 8 points; returns an empty string on success.
std::string eight_point_pipeline(const std::vector<ProjPoint>& pts) {
  const CubicPencil pencil = pencil_through_points(pts);
  int total = 0;
  for (const auto& b : base_points(pencil)) {
    if (!b.simple) return "non-simple base point";
    total += locus_size(b.locus) * b.multiplicity;
  }
  if (total != 9) return "base point total " + std::to_string(total);
  const auto cfg = fiber_configuration(cubic_to_weierstrass(pencil, pts.front()));
  const int rank = shioda_tate_rank(cfg);
  const MWGroupDescriptor mw = identify_mw(trivial_lattice(cfg));
  if (rank != 8 || mw.rank != 8 || mw.lattice() != "E8") return "rank " + std::to_string(rank) + ", " + mw.lattice();
  return {};
}

void eight_points(Outcome& o) {
  const std::vector<ProjPoint> fixed = {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1),
                                        pt(1, 2, 3), pt(2, 3, 1), pt(3, 1, 2), pt(1, 4, 9)};
  auto start = Clock::now();
  const std::string err = eight_point_pipeline(fixed);
  o.require(err.empty(), "fixed set: " + err);
  o.within(start, 30, "fixed set");

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(-6, 6);
  int accepted = 0, rejected = 0;
  while (accepted < 20) {
    std::vector<ProjPoint> pts;
    while (pts.size() < 8) {
      const int a = coord(rng), b = coord(rng), c = coord(rng);
      if (a == 0 && b == 0 && c == 0) continue;
      const ProjPoint p = pt(a, b, c);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (!general_position(pts).in_general_position()) {
      ++rejected;
      continue;
    }
    ++accepted;
    start = Clock::now();
    const std::string e = eight_point_pipeline(pts);
    o.require(e.empty(), "random set " + std::to_string(accepted) + ": " + e);
    o.within(start, 30, "random set " + std::to_string(accepted));
  }
  o.detail << "fixed set + " << accepted << " random sets (" << rejected << " draws not in general position)";
}

void beauville(Outcome& o) {
  const CubicPencil pencil(PlaneCurve(parse_form("(X+Y)*(Y+Z)*(Z+X)")), PlaneCurve(parse_form("X*Y*Z")));
  int doubles = 0, simples = 0;
  std::vector<ProjPoint> simple_pts;
  for (const auto& b : base_points(pencil)) {
    if (!std::holds_alternative<ProjPoint>(b.locus)) continue;
    if (b.multiplicity == 2) ++doubles;
    if (b.multiplicity == 1) {
      ++simples;
      simple_pts.push_back(std::get<ProjPoint>(b.locus));
    }
  }
  o.require(doubles == 3 && simples == 3, "base points " + std::to_string(doubles) + " double, " +
                                              std::to_string(simples) + " simple");
  const auto gp = general_position(simple_pts);
  o.require(gp.collinear.size() == 1, "simple points are not flagged collinear");
  const auto cfg = fiber_configuration(cubic_to_weierstrass(pencil, pt(0, 0, 1)));
  const int rank = shioda_tate_rank(cfg);
  o.require(rank == 0, "rank " + std::to_string(rank));
  o.detail << doubles << " double + " << simples << " simple base points, collinear, rank " << rank << ", T "
           << lattice_symbol(trivial_lattice(cfg));
}

void families(Outcome& o) {
  const auto start = Clock::now();
  std::mt19937 rng(7);
  for (Family f : {Family::E8a, Family::E8b, Family::E7a, Family::E7b, Family::E6a, Family::E6b}) {
    int good = 0, degenerate = 0;
    for (int draw = 0; draw < 5; ++draw) {
      std::vector<Rat> c;
      for (int i = 0; i < family_arity(f); ++i) c.push_back(rnd_rat(rng));
      const auto r = family_report(f, c);
      if (r["degenerate"].get<bool>()) {
        ++degenerate;
        continue;
      }
      o.require(r["matches_label"].get<bool>(), to_string(f) + " draw " + std::to_string(draw) + " identifies as " +
                                                    r["fibration"]["mw_group"].dump());
      if (f == Family::E7a || f == Family::E7b) {
        bool iii_or_i2 = false;
        for (const auto& fib : r["fibration"]["fibers"])
          if (fib["T"] == "A1") iii_or_i2 = fib["type"] == "III" || fib["type"] == "I2";
        o.require(iii_or_i2, to_string(f) + " reducible fiber is neither III nor I2");
      }
      ++good;
    }
    o.require(good >= 1, to_string(f) + " has no non-degenerate draw");
    o.detail << to_string(f) << ":" << good << " ok/" << degenerate << " degenerate ";
  }
  o.within(start, 60, "family checks");
}

void heights(Outcome& o) {
  {
    const auto m = WeierstrassModel::short_form(parse_unipoly("t^3 + 1"), parse_unipoly("-t^3 + 2*t^2 - t + 1"));
    const Section p(parse_unipoly("t"), parse_unipoly("t^2 + 1"));
    const auto cfg = fiber_configuration(m);
    o.require(cfg.fibers.size() >= 1 && trivial_lattice(cfg).size() == 1 &&
                  trivial_lattice(cfg).front().to_string() == "A1",
              "model is not a single-A1 configuration");
    Rat contr = 0;
    for (const auto& h : components_met(p, m, cfg)) contr += h.contribution;
    const Rat h = height_pairing(p, p, m, cfg);
    o.require(on_curve(p, m), "section not on curve");
    o.require(h == make_rat(3, 2), "<P,P> = " + to_string(h));
    o.require(intersection_with_zero(p, m) == 0, "(P,O) nonzero");
    o.require(contr == make_rat(1, 2), "contribution " + to_string(contr));
    o.require(!narrow_membership(p, m, cfg), "section is narrow");
    o.detail << "III model: <P,P>=" << h << " (P,O)=" << intersection_with_zero(p, m) << " contr=" << contr
             << " narrow=" << narrow_membership(p, m, cfg) << "; ";
  }
  {
    const auto m = WeierstrassModel::short_form(UniPoly(), parse_unipoly("t^5 + 15/8*t^3 + 65/64*t^2 - 1/4*t + 1"));
    const Section p(parse_unipoly("t^2"), parse_unipoly("t^3 + 1/2*t^2 - 1/8*t + 1"));
    const auto cfg = fiber_configuration(m);
    o.require(trivial_lattice(cfg).empty(), "model has reducible fibers");
    o.require(is_integral_section(p) && on_curve(p, m), "section is not an integral point of the model");
    const Rat h = height_pairing(p, p, m, cfg);
    o.require(h == 2, "<P,P> = " + to_string(h));
    o.detail << "irreducible-fiber model: <P,P>=" << h;
  }
}

void properties(Outcome& o) {
  const auto start = Clock::now();
  std::mt19937 rng(31337);

  int models = 0;
  std::uniform_int_distribution<int> deg(0, 6);
  while (models < 200) {
    std::optional<WeierstrassModel> m;
    try {
      m.emplace(rnd_poly(rng, deg(rng) % 2), rnd_poly(rng, deg(rng) % 3), rnd_poly(rng, deg(rng) % 4),
                rnd_poly(rng, deg(rng) % 5), rnd_poly(rng, 1 + deg(rng) % 6));
    } catch (const Error&) {
      continue;  // discriminant vanishes identically
    }
    ++models;
    const auto inv = curve_invariants(*m);
    o.require(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6 == Rat(1728) * inv.delta, "c4^3 - c6^2 != 1728 delta");
    try {
      const int e = fiber_configuration(*m).euler_total();
      o.require(e == 12, "Euler sum " + std::to_string(e) + " on " + m->to_string());
    } catch (const Error& err) {
      o.require(false, std::string(err.what()) + " on " + m->to_string());
    }
  }

  int pencils = 0;
  std::uniform_int_distribution<int> d(-4, 4);
  auto random_cubic = [&] {
    Poly3 f;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; i + j <= 3; ++j) f.add_term({i, j, 3 - i - j}, Rat(d(rng)));
    return f;
  };
  while (pencils < 100) {
    const Poly3 f = random_cubic(), g = random_cubic();
    if (f.is_zero() || g.is_zero()) continue;
    std::optional<CubicPencil> p;
    try {
      p.emplace(PlaneCurve(HomogeneousPoly3(f, 3)), PlaneCurve(HomogeneousPoly3(g, 3)));
    } catch (const Error&) {
      continue;  // common component
    }
    ++pencils;
    int total = 0;
    for (const auto& b : base_points(*p)) total += locus_size(b.locus) * b.multiplicity;
    o.require(total == 9, "Bezout total " + std::to_string(total));
  }

  int triples = 0;
  for (int i = 0; triples < 200; ++i) {
    const Rat u1 = rnd_rat(rng), u2 = rnd_rat(rng);
    const Rat u3 = i % 2 == 0 ? Rat(-u1 - u2) : rnd_rat(rng);
    if (cusp_point(u1) == cusp_point(u2) || cusp_point(u2) == cusp_point(u3) || cusp_point(u1) == cusp_point(u3))
      continue;
    ++triples;
    o.require(cusp_collinear(u1, u2, u3) == (u1 + u2 + u3 == 0), "cusp group law disagrees");
  }

  int ninth = 0;
  while (ninth < 10) {
    std::vector<Rat> u;
    std::vector<ProjPoint> pts;
    while (u.size() < 8) {
      const Rat x = rnd_rat(rng, 6);
      if (x == 0 || std::find(u.begin(), u.end(), x) != u.end()) continue;
      u.push_back(x);
      pts.push_back(cusp_point(x));
    }
    std::optional<CubicPencil> pencil;
    try {
      pencil.emplace(pencil_through_points(pts));
    } catch (const Error&) {
      continue;  // dependent conditions
    }
    ++ninth;
    // The ninth base point: the locus not among the eight, or a listed point
    // whose multiplicity is 2.
    std::optional<Rat> found;
    for (const auto& b : base_points(*pencil)) {
      if (!std::holds_alternative<ProjPoint>(b.locus)) continue;
      const ProjPoint& p = std::get<ProjPoint>(b.locus);
      const bool listed = std::find(pts.begin(), pts.end(), p) != pts.end();
      if (!listed || b.multiplicity == 2) found = cusp_parameter(p);
    }
    const Rat expected = ninth_base_parameter(u);
    o.require(found && *found == expected, "ninth base point mismatch");
  }
  o.detail << models << " models, " << pencils << " pencils, " << triples << " cusp triples, " << ninth
           << " ninth-point checks";
  o.within(start, 120, "property suites");
}

void index_three(Outcome& o) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rat> u;
    for (int j = 0; j < 8; ++j) u.push_back(rnd_rat(rng, 50));
    Rat sum = 0;
    for (const auto& x : u) sum += x;
    o.require(Rat(3) * manin_q_parameter(u) == sum, "3 u_Q != sum u");
  }
  o.detail << "100 tuples";
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> run;
};

const Criterion criteria[] = {
    {"lattice minimal vector counts", lattice_counts},
    {"del Pezzo (-1)-class counts", delpezzo_counts},
    {"E7 Gram and dual Gram oracle", matrix_oracle},
    {"special fibrations", special_fibrations},
    {"8-point pencils give rank 8, E8", eight_points},
    {"Beauville pencil", beauville},
    {"family identification", families},
    {"height identities", heights},
    {"property suites", properties},
    {"index-3 relation", index_three},
};

bool run(int n) {
  Outcome o;
  const auto start = Clock::now();
  try {
    criteria[n - 1].run(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[n - 1].title << " ("
            << seconds_since(start) << " s)  " << o.detail.str() << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run one criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (int n = 1; n <= 10; ++n)
    if (only == 0 || only == n) ok = run(n) && ok;
  return ok ? 0 : 1;
}
