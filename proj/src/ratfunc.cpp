#include <cubicmw/ratfunc.hpp>

namespace cubicmw {

RatFunc::RatFunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly::constant(Rat(1));
    return;
  }
  const UniPoly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  const Rat lead = den.leading();
  num_ = num * (Rat(1) / lead);
  den_ = den * (Rat(1) / lead);
}

std::optional<int> RatFunc::order_at(const PlaceCluster& place) const {
  if (is_zero()) return std::nullopt;
  if (place.is_infinity()) return den_.degree() - num_.degree();
  return valuation(num_, place) - valuation(den_, place);
}

RatFunc RatFunc::at_infinity(int w) const {
  if (is_zero()) return *this;
  const int dn = num_.degree(), dd = den_.degree();
  // s^w num(1/s) / den(1/s) = s^(w - dn + dd) num~(s) / den~(s)
  const int shift = w - dn + dd;
  UniPoly n = num_.reversed(dn), d = den_.reversed(dd);
  if (shift >= 0)
    n = n * UniPoly::monomial(Rat(1), shift);
  else
    d = d * UniPoly::monomial(Rat(1), -shift);
  return RatFunc(n, d);
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw domain_error("division by the zero function");
  *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

std::string RatFunc::to_string(char var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace cubicmw
