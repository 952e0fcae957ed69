#include <cubicmw/fibration.hpp>
#include <cubicmw/linalg.hpp>

namespace cubicmw {

namespace {

// Move `base` to [0:0:1] by a rational change of coordinates.
Poly3 centered(const Poly3& f, const ProjPoint& base) {
  // Columns: the two standard vectors other than the chart index, then base.
  RatMatrix m(3, RatVector(3));
  std::size_t col = 0;
  for (std::size_t e = 0; e < 3; ++e)
    if (e != base.chart()) m[e][col++] = 1;
  for (std::size_t i = 0; i < 3; ++i) m[i][2] = base[i];
  std::array<Poly3, 3> images;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (m[i][j] != 0) images[i] += Poly3::variable(j) * m[i][j];
  return f.substitute<3>(images);
}

// Coefficients in w of F(1, w, z) at z^k, for one generator.
std::vector<Rat> z_part(const Poly3& f, int k) {
  std::vector<Rat> out(static_cast<std::size_t>(3 - k) + 1);
  for (const auto& [e, c] : f.terms())
    if (e[2] == k) out[static_cast<std::size_t>(e[1])] += c;
  return out;
}

using PolyT = std::vector<UniPoly>;  // polynomial in w with Q[t] coefficients

PolyT mul(const PolyT& a, const PolyT& b) {
  PolyT out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

WeierstrassModel cubic_to_weierstrass(const CubicPencil& pencil, const ProjPoint& base) {
  const Poly3& h1 = pencil.h1().poly().poly();
  const Poly3& h2 = pencil.h2().poly().poly();
  if (h1(base.coords()) != 0 || h2(base.coords()) != 0)
    throw domain_error("point " + base.to_string() + " is not a base point of the pencil");
  bool singular_everywhere = true;
  for (std::size_t v = 0; v < 3; ++v)
    if (h1.derivative(v)(base.coords()) != 0 || h2.derivative(v)(base.coords()) != 0) singular_everywhere = false;
  if (singular_everywhere) throw domain_error("base point " + base.to_string() + " is singular on every member");

  // The member H1 + t H2 in coordinates where the base point is [0:0:1]:
  // z^2 L(w) + z Q(w) + C(w) on the line through it with slope w. The
  // other two intersections are the roots in z, so the member is the
  // double cover v^2 = Q^2 - 4 L C of the line.
  const Poly3 g1 = centered(h1, base), g2 = centered(h2, base);
  auto combine = [&](int k) {
    const auto p = z_part(g1, k), q = z_part(g2, k);
    PolyT out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = UniPoly{p[i], q[i]};
    return out;
  };
  const PolyT l = combine(2), qd = combine(1), c = combine(0);
  PolyT d = mul(qd, qd);
  const PolyT lc = mul(l, c);
  for (std::size_t i = 0; i < lc.size(); ++i) d[i] -= Rat(4) * lc[i];
  d.resize(5);

  // Invariants of the binary quartic a w^4 + b w^3 + c w^2 + d w + e; its
  // Jacobian is y^2 = x^3 - 27 I x - 27 J.
  const UniPoly &qa = d[4], &qb = d[3], &qc = d[2], &qd4 = d[1], &qe = d[0];
  const UniPoly inv_i = Rat(12) * qa * qe - Rat(3) * qb * qd4 + qc * qc;
  const UniPoly inv_j = Rat(72) * qa * qc * qe + Rat(9) * qb * qc * qd4 - Rat(27) * qa * qd4 * qd4 -
                        Rat(27) * qe * qb * qb - Rat(2) * qc * qc * qc;
  return WeierstrassModel::short_form(Rat(-27) * inv_i, Rat(-27) * inv_j);
}

}  // namespace cubicmw
