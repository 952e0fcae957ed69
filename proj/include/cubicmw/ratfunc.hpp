#ifndef CUBICMW_RATFUNC_HPP
#define CUBICMW_RATFUNC_HPP

#include <cubicmw/place.hpp>

#include <optional>
#include <string>

namespace cubicmw {

/// Element of Q(t) in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(UniPoly::constant(Rat(1))) {}
  RatFunc(UniPoly p) : num_(std::move(p)), den_(UniPoly::constant(Rat(1))) {}  // NOLINT: implicit on purpose
  RatFunc(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Order of vanishing at a place; nullopt for the zero function.
  std::optional<int> order_at(const PlaceCluster& place) const;
  /// s^w f(1/s), written again in the variable t.
  RatFunc at_infinity(int w) const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator*(const Rat& s, const RatFunc& f) { return RatFunc(f.num_ * s, f.den_); }

  bool operator==(const RatFunc&) const = default;

  std::string to_string(char var = 't') const;

 private:
  UniPoly num_, den_;
};

}  // namespace cubicmw

#endif  // CUBICMW_RATFUNC_HPP
