#ifndef CUBICMW_TEST_HELPERS_HPP
#define CUBICMW_TEST_HELPERS_HPP

#include <cubicmw/parse.hpp>
#include <cubicmw/plane_curves.hpp>

#include <random>

namespace cubicmw::testing {

inline Rat q(const char* s) { return parse_rat(s); }
inline UniPoly up(const char* s) { return parse_unipoly(s); }
inline PlaneCurve curve(const char* s) { return PlaneCurve(parse_form(s)); }
inline ProjPoint pt(long a, long b, long c) { return ProjPoint(Rat(a), Rat(b), Rat(c)); }

inline CubicPencil beauville() { return CubicPencil(curve("(X+Y)*(Y+Z)*(Z+X)"), curve("X*Y*Z")); }

inline std::vector<ProjPoint> sample_points() {
  return {pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1), pt(1, 1, 1), pt(1, 2, 3), pt(2, 3, 1), pt(3, 1, 2), pt(1, 4, 9)};
}

inline Rat random_rat(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  return make_rat(num(rng), den(rng));
}

inline UniPoly random_poly(std::mt19937& rng, int degree, int range = 9) {
  std::vector<Rat> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rat(rng, range));
  return UniPoly(std::move(c));
}

}  // namespace cubicmw::testing

#endif  // CUBICMW_TEST_HELPERS_HPP
