#ifndef CUBICMW_UNIPOLY_HPP
#define CUBICMW_UNIPOLY_HPP

#include <cubicmw/rational.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cubicmw {

/// Dense univariate polynomial over Q. Coefficients are indexed by exponent
/// and trailing zeros are always stripped, so the zero polynomial has an
/// empty coefficient vector and degree kZeroDegree.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, int exponent);
  /// The linear polynomial t - root.
  static UniPoly linear_root(const Rat& root);
  static UniPoly variable() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Rat> coeffs() const { return coeffs_; }
  Rat coeff(int exponent) const;
  const Rat& leading() const;
  /// Lowest exponent with a nonzero coefficient; the t-adic valuation.
  int low_degree() const;

  Rat operator()(const Rat& at) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly compose(const UniPoly& inner) const;
  /// t^k * f(1/t); requires k >= degree().
  UniPoly reversed(int k) const;
  /// f(t + c)
  UniPoly shifted(const Rat& c) const;
  /// Scale to a primitive polynomial with integer coefficients and positive
  /// leading coefficient.
  UniPoly primitive_part() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rat& scalar);

  friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
  friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
  friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
  friend UniPoly operator*(UniPoly lhs, const Rat& s) { return lhs *= s; }
  friend UniPoly operator*(const Rat& s, UniPoly rhs) { return rhs *= s; }
  UniPoly operator-() const;

  bool operator==(const UniPoly& other) const = default;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

UniPoly pow(const UniPoly& base, unsigned exponent);

/// Euclidean division: returns (quotient, remainder).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
UniPoly operator/(const UniPoly& num, const UniPoly& den);
UniPoly operator%(const UniPoly& num, const UniPoly& den);
/// Division that must be exact; throws otherwise.
UniPoly exact_div(const UniPoly& num, const UniPoly& den);
bool divides(const UniPoly& d, const UniPoly& f);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Inverse of a modulo m; throws if gcd(a, m) is not constant.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);
UniPoly squarefree_part(const UniPoly& f);

/// Yun's algorithm. Factors are monic, squarefree and pairwise coprime; the
/// product of factor^multiplicity equals f up to its leading coefficient.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

/// Split a monic squarefree g into (gcd(g, h), g / gcd(g, h)), both monic.
std::pair<UniPoly, UniPoly> gcd_split(const UniPoly& g, const UniPoly& h);

/// Rational roots with multiplicity, ascending.
std::vector<Rat> rational_roots(const UniPoly& f);

/// Polynomial in a main variable whose coefficients live in Q[t]. Index i
/// holds the coefficient of the main variable to the power i.
struct BiPoly {
  std::vector<UniPoly> coeffs;

  int degree() const;
  void trim();
  bool is_zero() const { return degree() < 0; }
  /// Substitute a value for t.
  UniPoly specialize(const Rat& t) const;
};

/// Sylvester resultant with respect to the main variable, f-rows first,
/// computed by fraction-free elimination over Q[t].
UniPoly poly_resultant(const BiPoly& f, const BiPoly& g);

/// Coefficients S_k,0 .. S_k,k of the k-th subresultant of f, g, for
/// 0 <= k < min of the main degrees. S_k,k is the principal coefficient.
std::vector<UniPoly> subresultant(const BiPoly& f, const BiPoly& g, int k);

/// Determinant over Q[t] by Bareiss elimination.
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m);

/// Sturm-sequence count of distinct real roots of squarefree f in (a, b].
int count_real_roots(const UniPoly& f, const Rat& a, const Rat& b);

}  // namespace cubicmw

#endif  // CUBICMW_UNIPOLY_HPP
