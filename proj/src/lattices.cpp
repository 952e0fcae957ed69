#include <cubicmw/lattices.hpp>

#include <algorithm>
#include <charconv>

namespace cubicmw {

RootLatticeId::RootLatticeId(RootFamily f, int r) : family(f), rank(r) {
  const bool ok = (f == RootFamily::A && r >= 1) || (f == RootFamily::D && r >= 4) ||
                  (f == RootFamily::E && r >= 6 && r <= 8);
  if (!ok) throw domain_error("no root lattice " + to_string());
}

RootLatticeId RootLatticeId::parse(std::string_view text) {
  if (text.size() < 2) throw Error(Error::Kind::Parse, "bad lattice name '" + std::string(text) + "'");
  RootFamily f;
  switch (text[0]) {
    case 'A': f = RootFamily::A; break;
    case 'D': f = RootFamily::D; break;
    case 'E': f = RootFamily::E; break;
    default: throw Error(Error::Kind::Parse, "bad lattice name '" + std::string(text) + "'");
  }
  int r = 0;
  const auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), r);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(Error::Kind::Parse, "bad lattice name '" + std::string(text) + "'");
  return RootLatticeId(f, r);
}

std::string RootLatticeId::to_string() const {
  const char* letter = family == RootFamily::A ? "A" : family == RootFamily::D ? "D" : "E";
  return letter + std::to_string(rank);
}

LatticeName LatticeName::parse(std::string_view text) {
  const bool dual = !text.empty() && text.back() == 'v';
  if (dual) text.remove_suffix(1);
  return {RootLatticeId::parse(text), dual};
}

GramMatrix::GramMatrix(RatMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw domain_error("empty Gram matrix");
  for (const auto& row : entries_)
    if (row.size() != n) throw domain_error("Gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i][j] != entries_[j][i]) throw domain_error("Gram matrix is not symmetric");
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix minor(k, RatVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = entries_[i][j];
    if (cubicmw::determinant(minor) <= 0) throw domain_error("Gram matrix is not positive definite");
  }
}

bool GramMatrix::is_integral() const {
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (!cubicmw::is_integer(e)) return false;
  return true;
}

Rat GramMatrix::determinant() const { return cubicmw::determinant(entries_); }

Rat GramMatrix::pairing(const RatVector& u, const RatVector& v) const {
  if (u.size() != rank() || v.size() != rank()) throw domain_error("vector length does not match the lattice rank");
  Rat s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += u[i] * entries_[i][j] * v[j];
  return s;
}

Int AbelianGroupDescriptor::order() const {
  Int n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::string AbelianGroupDescriptor::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::string s;
  for (const auto& d : invariant_factors) s += (s.empty() ? "Z/" : " x Z/") + d.get_str();
  return s;
}

GramMatrix root_gram(const RootLatticeId& id) {
  const std::size_t n = static_cast<std::size_t>(id.rank);
  RatMatrix m(n, RatVector(n, Rat(0)));
  auto edge = [&](std::size_t i, std::size_t j) { m[i - 1][j - 1] = m[j - 1][i - 1] = -1; };
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  switch (id.family) {
    case RootFamily::A:
      for (std::size_t i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case RootFamily::D:
      for (std::size_t i = 1; i + 1 < n; ++i) edge(i, i + 1);
      edge(n - 2, n);
      break;
    case RootFamily::E:
      for (std::size_t i = 1; i + 1 < n; ++i) edge(i, i + 1);
      edge(3, n);
      break;
  }
  return GramMatrix(std::move(m));
}

GramMatrix lattice_gram(const LatticeName& name) {
  const GramMatrix g = root_gram(name.id);
  return name.dual ? dual_gram(g) : g;
}

GramMatrix dual_gram(const GramMatrix& g) { return GramMatrix(inverse(g.entries())); }

AbelianGroupDescriptor discriminant_group(const GramMatrix& g) {
  if (!g.is_integral()) throw domain_error("discriminant group needs an integral Gram matrix");
  IntMatrix m(g.rank(), std::vector<Int>(g.rank()));
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j) m[i][j] = g(i, j).get_num();
  AbelianGroupDescriptor out;
  for (const Int& d : smith_diagonal(std::move(m)))
    if (abs(d) > 1) out.invariant_factors.push_back(abs(d));
  return out;
}

namespace {

// Integers x with (x + c)^2 <= r, as an inclusive range (lo > hi when empty).
std::pair<Int, Int> integer_window(const Rat& c, const Rat& r) {
  if (r < 0) return {Int(1), Int(0)};
  Int s;
  mpz_sqrt(s.get_mpz_t(), floor_rat(r).get_mpz_t());  // floor(sqrt(r))
  auto fits = [&](const Int& x) {
    const Rat d = Rat(x) + c;
    return d * d <= r;
  };
  Int lo = floor_rat(-c) - s - 1, hi = ceil_rat(-c) + s + 1;
  while (lo <= hi && !fits(lo)) ++lo;
  while (hi >= lo && !fits(hi)) --hi;
  return {lo, hi};
}

}  // namespace

std::vector<LatticeVector> minimal_vectors(const GramMatrix& g, const Rat& norm, Basis basis) {
  if (norm <= 0) throw domain_error("norm must be positive");
  const std::size_t n = g.rank();
  // g = L D L^T with L unit lower triangular, so
  // x^T g x = sum_i D_i (x_i + sum_{j>i} L_ji x_j)^2.
  RatMatrix l = identity_matrix(n);
  RatVector d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = g(j, j);
    for (std::size_t k = 0; k < j; ++k) s -= l[j][k] * l[j][k] * d[k];
    d[j] = s;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat t = g(i, j);
      for (std::size_t k = 0; k < j; ++k) t -= l[i][k] * l[j][k] * d[k];
      l[i][j] = t / d[j];
    }
  }

  std::vector<RatVector> found;
  std::vector<Int> x(n);
  // Fill coordinates from the last one down; budget is what remains of norm.
  auto descend = [&](auto&& self, std::size_t level, const Rat& budget) -> void {
    const std::size_t i = level - 1;
    Rat c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += l[j][i] * x[j];
    const auto [lo, hi] = integer_window(c, budget / d[i]);
    for (Int v = lo; v <= hi; ++v) {
      x[i] = v;
      const Rat shifted = Rat(v) + c;
      const Rat rest = budget - d[i] * shifted * shifted;
      if (i == 0) {
        if (rest == 0) found.emplace_back(x.begin(), x.end());
      } else {
        self(self, i, rest);
      }
    }
  };
  descend(descend, n, norm);

  std::sort(found.begin(), found.end());
  std::vector<LatticeVector> out;
  out.reserve(found.size());
  for (auto& v : found) out.push_back({std::move(v), basis});
  return out;
}

LatticeVector basis_change_to_dual(const LatticeVector& v, const GramMatrix& g) {
  if (v.basis != Basis::Root) throw domain_error("expected root coordinates");
  if (v.coords.size() != g.rank()) throw domain_error("vector length does not match the lattice rank");
  return {multiply(transpose(g.entries()), v.coords), Basis::Dual};
}

}  // namespace cubicmw
