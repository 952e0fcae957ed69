#include "zero_set.hpp"

#include <cubicmw/linalg.hpp>

#include <random>

namespace cubicmw::detail {

namespace {

Poly2 dehomogenize(const Poly3& f) {
  Poly2 out;
  for (const auto& [e, c] : f.terms()) out.add_term({e[0], e[1]}, c);
  return out;
}

Poly3 homogenize(const BiPoly& b, int degree) {
  Poly3 out;
  for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
    const auto c = b.coeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
      out.add_term({static_cast<int>(i), static_cast<int>(j), degree - static_cast<int>(i + j)}, c[i]);
  }
  return out;
}

Poly3 transform_back(const Poly3& f, const CoordinateChange& m) {
  RatMatrix r(3, RatVector(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = m[i][j];
  const RatMatrix inv = inverse(r);
  std::array<Poly3, 3> images;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (inv[i][j] != 0) images[i] += Poly3::variable(j) * inv[i][j];
  return f.substitute<3>(images);
}

// A chart where both forms are monic in y up to a constant.
CoordinateChange chart_for(const Poly3& a, const Poly3& b) {
  const std::array<Rat, 3> vertical{Rat(0), Rat(1), Rat(0)};
  for (int attempt = 0;; ++attempt) {
    const CoordinateChange m = candidate_chart(attempt);
    if (transform_form(a, m)(vertical) != 0 && transform_form(b, m)(vertical) != 0) return m;
  }
}

UniPoly mod(const UniPoly& a, const UniPoly& q) { return q.degree() <= 0 ? UniPoly() : a % q; }

// Solve in a chart where both forms are already transformed. Returns nullopt
// when the chart is not generic enough.
std::optional<ZeroSet> solve_in_chart(const Poly3& ft, const Poly3& gt, const CoordinateChange& chart) {
  const std::array<Rat, 3> vertical{Rat(0), Rat(1), Rat(0)};
  if (ft(vertical) == 0 || gt(vertical) == 0) return std::nullopt;

  ZeroSet out;
  BiPoly f = as_bipoly_in_y(dehomogenize(ft));
  BiPoly g = as_bipoly_in_y(dehomogenize(gt));
  const int df = f.degree(), dg = g.degree();
  if (df == 0 || dg == 0) return out;

  const UniPoly res = poly_resultant(f, g);
  if (res.is_zero()) {
    out.common_factor = true;
    return out;
  }
  if (res.degree() != df * dg) return std::nullopt;  // common points at infinity

  // On the part of a factor where the principal subresultant coefficients
  // psc_1 .. psc_{k-1} vanish and psc_k does not, S_k(x, y) is the gcd of f
  // and g on each vertical line. The chart is generic when that gcd is a
  // perfect k-th power, i.e. a single common point per line.
  const int d = std::min(df, dg);
  std::vector<std::vector<UniPoly>> chain(static_cast<std::size_t>(d) + 1);
  auto chain_at = [&](int k) -> const std::vector<UniPoly>& {
    auto& c = chain[static_cast<std::size_t>(k)];
    if (c.empty()) c = k < d ? subresultant(f, g, k) : (dg <= df ? g : f).coeffs;
    return c;
  };

  for (const auto& [factor, mult] : squarefree_decomposition(res)) {
    UniPoly remaining = factor;
    for (int k = 1; k <= d && remaining.degree() > 0; ++k) {
      const auto& s = chain_at(k);
      const auto [zero, live] = gcd_split(remaining, mod(s[static_cast<std::size_t>(k)], remaining));
      remaining = zero;
      if (live.degree() <= 0) continue;
      const UniPoly lead = mod(s[static_cast<std::size_t>(k)], live);
      const UniPoly y = mod(-mod(s[static_cast<std::size_t>(k) - 1], live) * inverse_mod(lead, live) * make_rat(1, k), live);
      // Compare with lead * (y - y0)^k coefficientwise.
      UniPoly binom = UniPoly::constant(Rat(1));  // C(k, j) (-y0)^(k-j) built from j = k down
      for (int j = k; j >= 0; --j) {
        if (mod(s[static_cast<std::size_t>(j)] - lead * binom, live) != UniPoly()) return std::nullopt;
        if (j > 0) binom = mod(-binom * y * make_rat(j, k - j + 1), live);
      }
      out.clusters.push_back({chart, live, y, mult});
    }
    if (remaining.degree() > 0) return std::nullopt;
  }
  return out;
}

constexpr int kMaxAttempts = 64;

[[noreturn]] void give_up() {
  throw domain_error("elimination found no generic chart");
}

}  // namespace

Poly3 form_gcd(const Poly3& a, const Poly3& b) {
  if (a.is_zero() || b.is_zero()) throw domain_error("gcd of a zero form");
  const CoordinateChange m = chart_for(a, b);
  const BiPoly f = as_bipoly_in_y(dehomogenize(transform_form(a, m)));
  const BiPoly g = as_bipoly_in_y(dehomogenize(transform_form(b, m)));
  const Poly3 one = Poly3::constant(Rat(1));
  if (f.degree() == 0 || g.degree() == 0 || !poly_resultant(f, g).is_zero()) return one;

  // The first subresultant that does not vanish is a multiple of the gcd by
  // a polynomial in x alone.
  const int d = std::min(f.degree(), g.degree());
  BiPoly s{(f.degree() <= g.degree() ? f : g).coeffs};
  for (int k = 1; k < d; ++k) {
    BiPoly sk{subresultant(f, g, k)};
    sk.trim();
    if (!sk.is_zero()) {
      s = std::move(sk);
      break;
    }
  }
  UniPoly content;
  for (const auto& c : s.coeffs) content = gcd(content, c);
  for (auto& c : s.coeffs) c = exact_div(c, content);
  int degree = 0;
  for (std::size_t j = 0; j < s.coeffs.size(); ++j)
    degree = std::max(degree, s.coeffs[j].degree() + static_cast<int>(j));
  return transform_back(homogenize(s, degree), m);
}

Poly3 form_div(const Poly3& a, const Poly3& d) {
  const CoordinateChange m = chart_for(a, d);
  const BiPoly f = as_bipoly_in_y(dehomogenize(transform_form(a, m)));
  const BiPoly g = as_bipoly_in_y(dehomogenize(transform_form(d, m)));
  const int dg = g.degree();
  const Rat lead_inv = Rat(1) / g.coeffs[static_cast<std::size_t>(dg)].coeff(0);
  BiPoly r = f, q;
  q.coeffs.resize(static_cast<std::size_t>(std::max(r.degree() - dg, 0)) + 1);
  while (!r.is_zero() && r.degree() >= dg) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - dg);
    const UniPoly c = r.coeffs[static_cast<std::size_t>(r.degree())] * lead_inv;
    q.coeffs[shift] += c;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) r.coeffs[j + shift] -= c * g.coeffs[j];
    r.trim();
  }
  if (!r.is_zero()) throw domain_error("form division is not exact");
  q.trim();
  return transform_back(homogenize(q, a.total_degree() - d.total_degree()), m);
}

CoordinateChange candidate_chart(int attempt) {
  std::mt19937 rng(0x5eed0000u + static_cast<unsigned>(attempt));
  const int range = 1 + attempt / 6;
  std::uniform_int_distribution<int> dist(-range, range);
  while (true) {
    CoordinateChange m;
    RatMatrix r(3, RatVector(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        // The first attempts stay close to the identity.
        const int v = attempt < 3 && i != j && (i + j + attempt) % 2 == 0 ? 0 : dist(rng);
        m[i][j] = v + (i == j && attempt < 3 ? 1 : 0);
        r[i][j] = m[i][j];
      }
    if (determinant(r) != 0) return m;
  }
}

Poly3 transform_form(const Poly3& f, const CoordinateChange& m) {
  std::array<Poly3, 3> images;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (m[i][j] != 0) images[i] += Poly3::variable(j) * Rat(m[i][j]);
  return f.substitute<3>(images);
}

std::array<UniPoly, 3> ZeroCluster::coords() const {
  std::array<UniPoly, 3> out;
  const UniPoly x = mod(UniPoly::variable(), q);
  for (std::size_t i = 0; i < 3; ++i)
    out[i] = mod(x * Rat(chart[i][0]) + y_of_x * Rat(chart[i][1]) + UniPoly::constant(Rat(chart[i][2])), q);
  return out;
}

UniPoly ZeroCluster::evaluate(const Poly3& form) const { return evaluate_mod(form, coords(), q); }

ZeroCluster ZeroCluster::restricted(const UniPoly& factor) const {
  const UniPoly f = factor.monic();
  return {chart, f, mod(y_of_x, f), multiplicity};
}

UniPoly evaluate_mod(const Poly3& form, const std::array<UniPoly, 3>& at, const UniPoly& q) {
  std::array<std::vector<UniPoly>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) powers[i].push_back(mod(UniPoly::constant(Rat(1)), q));
  UniPoly acc;
  for (const auto& [e, c] : form.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (std::size_t i = 0; i < 3; ++i) {
      auto& p = powers[i];
      while (static_cast<int>(p.size()) <= e[i]) p.push_back(mod(p.back() * at[i], q));
      if (e[i] > 0) term = mod(term * p[static_cast<std::size_t>(e[i])], q);
    }
    acc += term;
  }
  return mod(acc, q);
}

SplitCluster split_rational(const ZeroCluster& c) {
  SplitCluster out;
  UniPoly rest = c.q;
  for (const Rat& x : rational_roots(c.q)) {
    const Rat y = c.y_of_x(x);
    std::array<Rat, 3> p;
    for (std::size_t i = 0; i < 3; ++i) p[i] = c.chart[i][0] * x + c.chart[i][1] * y + c.chart[i][2];
    out.points.emplace_back(p);
    rest = exact_div(rest, UniPoly::linear_root(x));
  }
  if (rest.degree() > 0) out.rest = c.restricted(rest);
  return out;
}

ZeroSet common_zeros(const Poly3& f, const Poly3& g) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const CoordinateChange chart = candidate_chart(attempt);
    if (auto z = solve_in_chart(transform_form(f, chart), transform_form(g, chart), chart)) return *z;
  }
  give_up();
}

ZeroSet critical_zeros(const Poly3& f) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const CoordinateChange chart = candidate_chart(attempt);
    const Poly3 ft = transform_form(f, chart);
    if (auto z = solve_in_chart(ft, ft.derivative(1), chart)) return *z;
  }
  give_up();
}

}  // namespace cubicmw::detail
