#ifndef CUBICMW_DELPEZZO_HPP
#define CUBICMW_DELPEZZO_HPP

#include <cubicmw/rational.hpp>

#include <string>
#include <vector>

namespace cubicmw {

/// The class a H - (b1 E1 + ... + bm Em) on the plane blown up at m points.
struct PicClass {
  int a = 0;
  std::vector<int> b;

  int self_intersection() const;  // a^2 - sum b_i^2
  int canonical_degree() const;   // -K . C = 3a - sum b_i

  auto operator<=>(const PicClass&) const = default;
};

/// Degree 9 - m of the blow-up at 1 <= m <= 8 points.
int degree(int m);

/// Every class with C^2 = -1 and -K.C = 1, sorted. The exceptional curve
/// E_i itself is a = 0, b_i = -1.
std::vector<PicClass> minus_one_classes(int m);

/// Minimal vectors of the lattice matching m = 8, 7, 6: E8 at norm 2, E7
/// dual at 3/2, E6 dual at 4/3.
std::size_t lattice_count(int m);

/// |minus_one_classes(m)| == lattice_count(m), for m in {6, 7, 8}.
bool cross_validate_counts(int m);

}  // namespace cubicmw

#endif  // CUBICMW_DELPEZZO_HPP
