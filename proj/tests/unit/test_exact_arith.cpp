#include <doctest.h>

#include <cubicmw/place.hpp>

#include <algorithm>

#include "test_helpers.hpp"

using namespace cubicmw;
using namespace cubicmw::testing;

namespace {

BiPoly in_x(std::initializer_list<UniPoly> c) { return BiPoly{std::vector<UniPoly>(c)}; }

// Factor lists compared without regard to order.
std::vector<std::pair<std::string, int>> as_set(const std::vector<std::pair<UniPoly, int>>& v) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [f, m] : v) out.emplace_back(f.to_string(), m);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(q("6/4")) == "3/2");
  CHECK(to_string(q("-0/7")) == "0");
  CHECK(q("-3") == make_rat(-3));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK(floor_rat(q("-3/2")) == -2);
  CHECK(ceil_rat(q("-3/2")) == -1);
}

TEST_CASE("polynomial parsing") {
  CHECK(up("3/2*t^4 - t + 1") == UniPoly{Rat(1), Rat(-1), Rat(0), Rat(0), q("3/2")});
  CHECK(up("(t+1)^2") == UniPoly{Rat(1), Rat(2), Rat(1)});
  const auto f = parse_form("X^2*Y + Z^3");
  CHECK(f.degree() == 3);
  try {
    parse_form("X^2 + Y");
    FAIL("inhomogeneous form accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Parse);
  }
  try {
    parse_unipoly("t + * 2");
    FAIL("bad syntax accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Parse);
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
}

TEST_CASE("resultant oracles") {
  // Res_x(x^2 - 2, x - 1) = -1
  CHECK(poly_resultant(in_x({UniPoly{Rat(-2)}, UniPoly{Rat(0)}, UniPoly{Rat(1)}}),
                       in_x({UniPoly{Rat(-1)}, UniPoly{Rat(1)}})) == UniPoly{Rat(-1)});
  // Res_x(x - t, x - 2t) = -t with f-rows first
  CHECK(poly_resultant(in_x({up("-t"), UniPoly{Rat(1)}}), in_x({up("-2*t"), UniPoly{Rat(1)}})) == up("-t"));
  // Res(f, f) = 0
  const BiPoly f = in_x({up("t"), up("1"), up("t^2")});
  CHECK(poly_resultant(f, f).is_zero());
  CHECK_THROWS_WITH_AS(poly_resultant(in_x({up("t")}), in_x({up("2")})), "nothing to eliminate", Error);
}

TEST_CASE("resultant vanishes iff a common factor exists") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    UniPoly a = random_poly(rng, 1 + trial % 4, 4), b = random_poly(rng, 1 + trial % 3, 4);
    if (trial % 2 == 0) {
      const UniPoly common = random_poly(rng, 1, 4);
      a = a * common;
      b = b * common;
    }
    if (a.degree() < 1 || b.degree() < 1) continue;
    BiPoly fa, fb;
    for (const auto& c : a.coeffs()) fa.coeffs.push_back(UniPoly::constant(c));
    for (const auto& c : b.coeffs()) fb.coeffs.push_back(UniPoly::constant(c));
    CHECK(poly_resultant(fa, fb).is_zero() == (gcd(a, b).degree() > 0));
  }
}

TEST_CASE("squarefree decomposition oracles") {
  using Decomp = std::vector<std::pair<UniPoly, int>>;
  CHECK(squarefree_decomposition(up("t^3")) == Decomp{{up("t"), 3}});
  CHECK(as_set(squarefree_decomposition(up("-16*(4*t^9 + 27*t^8)"))) == as_set(Decomp{{up("t"), 8}, {up("t + 27/4"), 1}}));
  CHECK(squarefree_decomposition(up("5")).empty());
  CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), Error);
}

TEST_CASE("squarefree decomposition reassembles") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly f = random_poly(rng, 0, 5);
    if (f.is_zero()) f = UniPoly::constant(Rat(3));
    for (int k = 0; k < 3; ++k) f = f * pow(random_poly(rng, 1 + k % 2, 3), static_cast<unsigned>(1 + (trial + k) % 3));
    if (f.is_zero()) continue;
    UniPoly back = UniPoly::constant(f.leading());
    for (const auto& [factor, m] : squarefree_decomposition(f)) {
      CHECK(factor == factor.monic());
      CHECK(gcd(factor, factor.derivative()).degree() == 0);
      back = back * pow(factor, static_cast<unsigned>(m));
    }
    CHECK(back == f);
  }
}

TEST_CASE("valuation oracles") {
  const auto at_t = PlaceCluster::finite(up("t"));
  CHECK(valuation(up("-432*t^10"), at_t) == 10);
  CHECK(valuation(up("t+1"), at_t) == 0);
  CHECK(valuation(up("t^2*(t+1)^3"), PlaceCluster::finite(up("t+1"))) == 3);
  CHECK_THROWS_WITH_AS(valuation(UniPoly(), at_t), "valuation of zero", Error);
  CHECK_THROWS_AS(valuation(up("t"), PlaceCluster::infinity()), Error);
}

TEST_CASE("valuation is additive") {
  std::mt19937 rng(17);
  const auto place = PlaceCluster::finite(up("t^2 + 1"));
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly f = random_poly(rng, 2, 4) * pow(up("t^2+1"), static_cast<unsigned>(trial % 3));
    UniPoly g = random_poly(rng, 3, 4) * pow(up("t^2+1"), static_cast<unsigned>(trial % 2));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(valuation(f * g, place) == valuation(f, place) + valuation(g, place));
  }
}

TEST_CASE("gcd_split oracles") {
  CHECK(gcd_split(up("t*(t+1)"), up("t")) == std::pair{up("t"), up("t+1")});
  CHECK(gcd_split(up("t+27/4"), up("-48*t^3")) == std::pair{up("1"), up("t+27/4")});
  CHECK(gcd_split(up("t^2-2"), UniPoly()) == std::pair{up("t^2-2"), up("1")});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const UniPoly g = squarefree_part(random_poly(rng, 4, 5) * up("t-1")).monic();
    const UniPoly h = random_poly(rng, 2, 5) * up("t-1");
    const auto [g1, g2] = gcd_split(g, h);
    CHECK(g1 * g2 == g);
    CHECK(gcd(g2, h).degree() == 0);
  }
}

TEST_CASE("rational roots oracles") {
  CHECK(rational_roots(up("4*t + 27")) == std::vector<Rat>{q("-27/4")});
  CHECK(rational_roots(up("t^2 + 1")).empty());
  CHECK(rational_roots(up("(t-1)^2*(2*t-3)")) == std::vector<Rat>{Rat(1), Rat(1), q("3/2")});
  CHECK(rational_roots(up("(3*t-7)*(t^2-2)*(5*t+1)")) == std::vector<Rat>{q("-1/5"), q("7/3")});
  CHECK_THROWS_AS(rational_roots(UniPoly()), Error);
}

TEST_CASE("place clusters") {
  CHECK_THROWS_AS(PlaceCluster::finite(up("t^2")), Error);
  const auto c = PlaceCluster::finite(up("2*t^2 - 4"));
  CHECK(c.defining_poly() == up("t^2 - 2"));
  CHECK(c.point_count() == 2);
  CHECK(PlaceCluster::infinity().point_count() == 1);
  CHECK(c < PlaceCluster::infinity());
  const auto split = valuation_split(up("t*(t+1)"), up("t^3*(t+1)"));
  CHECK(as_set(split) == as_set({{up("t"), 3}, {up("t+1"), 1}}));
}
