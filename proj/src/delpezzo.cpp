#include <cubicmw/delpezzo.hpp>
#include <cubicmw/lattices.hpp>

#include <algorithm>

namespace cubicmw {

int PicClass::self_intersection() const {
  int s = a * a;
  for (int x : b) s -= x * x;
  return s;
}

int PicClass::canonical_degree() const {
  int s = 3 * a;
  for (int x : b) s -= x;
  return s;
}

int degree(int m) {
  if (m < 1 || m > 8) throw domain_error("blow-up count must be between 1 and 8");
  return 9 - m;
}

namespace {

// Fill b[i..] with sum of squares `squares` and sum `total`.
void fill(std::vector<int>& b, std::size_t i, int squares, int total, int a, std::vector<PicClass>& out) {
  const int left = static_cast<int>(b.size() - i);
  if (left == 0) {
    if (squares == 0 && total == 0) out.push_back({a, b});
    return;
  }
  // Cauchy-Schwarz on what remains.
  if (total * total > left * squares) return;
  int bound = 0;
  while ((bound + 1) * (bound + 1) <= squares) ++bound;
  for (int v = -bound; v <= bound; ++v) {
    b[i] = v;
    fill(b, i + 1, squares - v * v, total - v, a, out);
  }
}

}  // namespace

std::vector<PicClass> minus_one_classes(int m) {
  degree(m);
  std::vector<PicClass> out;
  // (3a - 1)^2 <= m (a^2 + 1), i.e. a^2 (9 - m) - 6a + (1 - m) <= 0.
  for (int a = 0; a * a * (9 - m) - 6 * a + (1 - m) <= 0; ++a) {
    std::vector<int> b(static_cast<std::size_t>(m));
    fill(b, 0, a * a + 1, 3 * a - 1, a, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t lattice_count(int m) {
  switch (m) {
    case 8: return minimal_vectors(root_gram(RootLatticeId(RootFamily::E, 8)), Rat(2)).size();
    case 7: return minimal_vectors(dual_gram(root_gram(RootLatticeId(RootFamily::E, 7))), make_rat(3, 2), Basis::Dual).size();
    case 6: return minimal_vectors(dual_gram(root_gram(RootLatticeId(RootFamily::E, 6))), make_rat(4, 3), Basis::Dual).size();
    default: throw domain_error("lattice comparison exists for m = 6, 7, 8 only");
  }
}

bool cross_validate_counts(int m) { return minus_one_classes(m).size() == lattice_count(m); }

}  // namespace cubicmw
