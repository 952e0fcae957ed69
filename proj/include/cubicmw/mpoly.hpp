#ifndef CUBICMW_MPOLY_HPP
#define CUBICMW_MPOLY_HPP

#include <cubicmw/unipoly.hpp>

#include <array>
#include <map>
#include <sstream>
#include <string>

namespace cubicmw {

/// Sparse polynomial in N variables over Q. Zero coefficients are never
/// stored.
template <std::size_t N>
class MPoly {
 public:
  using Exponent = std::array<int, N>;
  using TermMap = std::map<Exponent, Rat>;

  MPoly() = default;

  static MPoly constant(const Rat& c) {
    MPoly p;
    p.add_term(Exponent{}, c);
    return p;
  }
  static MPoly variable(std::size_t i) {
    Exponent e{};
    e[i] = 1;
    MPoly p;
    p.add_term(e, Rat(1));
    return p;
  }
  static MPoly monomial(const Exponent& e, const Rat& c) {
    MPoly p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Exponent& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }
  int low_total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = d < 0 ? degree_of(e) : std::min(d, degree_of(e));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (degree_of(e) != d) return false;
    return true;
  }
  /// The homogeneous component of total degree d.
  MPoly homogeneous_part(int d) const {
    MPoly p;
    for (const auto& [e, c] : terms_)
      if (degree_of(e) == d) p.terms_.emplace(e, c);
    return p;
  }

  Rat operator()(const std::array<Rat, N>& at) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
      Rat m = c;
      for (std::size_t i = 0; i < N; ++i)
        for (int k = 0; k < e[i]; ++k) m *= at[i];
      acc += m;
    }
    return acc;
  }

  MPoly derivative(std::size_t var) const {
    MPoly p;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      f[var] -= 1;
      p.add_term(f, c * e[var]);
    }
    return p;
  }

  /// Replace each variable by a polynomial in M variables.
  template <std::size_t M>
  MPoly<M> substitute(const std::array<MPoly<M>, N>& images) const {
    std::array<std::vector<MPoly<M>>, N> powers;
    for (std::size_t i = 0; i < N; ++i) powers[i].push_back(MPoly<M>::constant(Rat(1)));
    MPoly<M> out;
    for (const auto& [e, c] : terms_) {
      MPoly<M> m = MPoly<M>::constant(c);
      for (std::size_t i = 0; i < N; ++i) {
        while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
        if (e[i] > 0) m = m * powers[i][static_cast<std::size_t>(e[i])];
      }
      out += m;
    }
    return out;
  }

  MPoly& operator+=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  MPoly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  MPoly operator-() const { return *this * Rat(-1); }
  bool operator==(const MPoly&) const = default;

  /// Human-readable form using the given variable names, highest terms first.
  std::string to_string(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rat mag = abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      bool any_var = false;
      std::ostringstream vars;
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] == 0) continue;
        if (any_var) vars << "*";
        vars << names[i];
        if (e[i] > 1) vars << "^" << e[i];
        any_var = true;
      }
      if (!any_var)
        os << mag.get_str();
      else if (mag == 1)
        os << vars.str();
      else
        os << mag.get_str() << "*" << vars.str();
    }
    return os.str();
  }

 private:
  static int degree_of(const Exponent& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }
  TermMap terms_;
};

using Poly2 = MPoly<2>;
using Poly3 = MPoly<3>;

/// View a bivariate polynomial in (x, y) as a polynomial in y with
/// coefficients in Q[x].
inline BiPoly as_bipoly_in_y(const Poly2& p) {
  BiPoly b;
  const int dy = p.degree_in(1);
  b.coeffs.resize(static_cast<std::size_t>(std::max(dy, -1) + 1));
  std::vector<std::vector<Rat>> dense(b.coeffs.size());
  for (const auto& [e, c] : p.terms()) {
    auto& row = dense[static_cast<std::size_t>(e[1])];
    if (static_cast<int>(row.size()) <= e[0]) row.resize(static_cast<std::size_t>(e[0]) + 1);
    row[static_cast<std::size_t>(e[0])] = c;
  }
  for (std::size_t i = 0; i < dense.size(); ++i) b.coeffs[i] = UniPoly(std::move(dense[i]));
  return b;
}

/// Homogeneous ternary form with its degree. The zero form is allowed and
/// carries the declared degree.
class HomogeneousPoly3 {
 public:
  HomogeneousPoly3() = default;
  HomogeneousPoly3(Poly3 poly, int degree);
  /// Infers the degree; poly must be nonzero and homogeneous.
  explicit HomogeneousPoly3(Poly3 poly);

  int degree() const { return degree_; }
  const Poly3& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  Rat operator()(const std::array<Rat, 3>& at) const { return poly_(at); }
  HomogeneousPoly3 derivative(std::size_t var) const;
  std::string to_string() const { return poly_.to_string({"X", "Y", "Z"}); }

  bool operator==(const HomogeneousPoly3&) const = default;

 private:
  Poly3 poly_;
  int degree_ = 0;
};

}  // namespace cubicmw

#endif  // CUBICMW_MPOLY_HPP
