#include <cubicmw/unipoly.hpp>
#include <cubicmw/place.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cubicmw {

namespace {

const Rat& zero_rat() {
  static const Rat z(0);
  return z;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error(Error::Kind::Parse, "empty rational");
  const auto slash = s.find('/');
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw Error(Error::Kind::Parse, "malformed rational '" + s + "'");
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error(Error::Kind::Parse, "malformed rational '" + s + "'");
  };
  Rat r;
  if (slash == std::string::npos) {
    check_digits(s, true);
    r = Rat(Int(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    if (num[0] == '+') num = num.substr(1);
    Int d(den);
    if (d == 0) throw Error(Error::Kind::Parse, "zero denominator in '" + s + "'");
    r = Rat(Int(num), d);
    r.canonicalize();
  }
  return r;
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, int exponent) {
  if (exponent < 0) throw domain_error("negative exponent");
  std::vector<Rat> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rat& root) { return UniPoly({-root, Rat(1)}); }

Rat UniPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(exponent)];
}

const Rat& UniPoly::leading() const {
  if (is_zero()) return zero_rat();
  return coeffs_.back();
}

int UniPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return kZeroDegree;
}

Rat UniPoly::operator()(const Rat& at) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  const Rat lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::reversed(int k) const {
  if (k < degree()) throw domain_error("reversal degree below polynomial degree");
  if (is_zero()) return {};
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(k - i)] = coeffs_[static_cast<std::size_t>(i)];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted(const Rat& c) const { return compose(UniPoly({c, Rat(1)})); }

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return {};
  Int den_lcm(1);
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Int content(0);
  std::vector<Int> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(v / content);
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(Rat(1));
  UniPoly b = base;
  while (exponent) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1u;
    if (exponent) b = b * b;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {UniPoly(), num};
  std::vector<Rat> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Rat> quot(static_cast<std::size_t>(num.degree() - den.degree() + 1));
  const Rat lc = den.leading();
  const int dd = den.degree();
  for (int i = num.degree(); i >= dd; --i) {
    const Rat q = rem[static_cast<std::size_t>(i)] / lc;
    quot[static_cast<std::size_t>(i - dd)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator/(const UniPoly& num, const UniPoly& den) { return divmod(num, den).first; }
UniPoly operator%(const UniPoly& num, const UniPoly& den) { return divmod(num, den).second; }

UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw domain_error("inexact polynomial division");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& f) { return (f % d).is_zero(); }

namespace {

using IntPoly = std::vector<Int>;  // coefficients by exponent, no trailing zeros

// Integer multiple of f with coprime coefficients.
IntPoly primitive_integer(const UniPoly& f) {
  Int den = 1;
  for (const Rat& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(f.coeffs().size());
  Int content = 0;
  for (const Rat& c : f.coeffs()) {
    out.push_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content > 1)
    for (Int& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

void make_primitive(IntPoly& f) {
  Int content = 0;
  for (const Int& c : f) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (Int& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of a by b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Int la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
    make_primitive(a);
  }
  return a;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  IntPoly x = primitive_integer(a), y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rat> c(x.begin(), x.end());
  return UniPoly(std::move(c)).monic();
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  UniPoly r0 = m, r1 = a % m;
  UniPoly s0, s1 = UniPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw domain_error("element is not invertible modulo the given polynomial");
  return (s0 * (Rat(1) / r0.leading())) % m;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw domain_error("squarefree part of zero");
  if (f.is_constant()) return UniPoly::constant(Rat(1));
  return exact_div(f, gcd(f, f.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw domain_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (f.is_constant()) return out;
  const UniPoly fm = f.monic();
  const UniPoly df = fm.derivative();
  const UniPoly a0 = gcd(fm, df);
  UniPoly b = exact_div(fm, a0);
  UniPoly c = exact_div(df, a0);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (!b.is_constant()) {
    UniPoly a = gcd(b, d);
    if (!a.is_constant()) out.emplace_back(a.monic(), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::pair<UniPoly, UniPoly> gcd_split(const UniPoly& g, const UniPoly& h) {
  if (g.is_zero()) throw domain_error("gcd_split of the zero polynomial");
  if (h.is_zero()) return {g.monic(), UniPoly::constant(Rat(1))};
  UniPoly g1 = gcd(g, h);
  UniPoly g2 = exact_div(g.monic(), g1);
  return {g1, g2.monic()};
}

// ------------------------------------------------------- real root counting

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    // Positive rescaling keeps sign variations intact and tames growth.
    r = r * (Rat(1) / abs(r.leading()));
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_changes(const std::vector<UniPoly>& seq, const Rat& at) {
  int changes = 0, prev = 0;
  for (const auto& p : seq) {
    const int s = sgn(p(at));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

Rat cauchy_bound(const UniPoly& f) {
  Rat m(0);
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rat(abs(f.coeff(i) / f.leading())));
  return Rat(ceil_rat(m)) + 1;
}

void isolate(const std::vector<UniPoly>& seq, const UniPoly& f, const Rat& lead_abs, Rat a, Rat b,
             int count, std::vector<Rat>& roots) {
  if (count == 0) return;
  if (count > 1) {
    Rat mid = (a + b) / 2;
    const int left = sign_changes(seq, a) - sign_changes(seq, mid);
    isolate(seq, f, lead_abs, a, mid, left, roots);
    isolate(seq, f, lead_abs, mid, b, count - left, roots);
    return;
  }
  // One root in (a, b]. A rational root of a primitive integer polynomial is
  // k / |lead| for an integer k, so shrink until at most one such k remains.
  while ((b - a) * lead_abs >= 1) {
    Rat mid = (a + b) / 2;
    if (sign_changes(seq, a) - sign_changes(seq, mid) == 1)
      b = mid;
    else
      a = mid;
  }
  const Int lo = ceil_rat(a * lead_abs);
  const Int hi = floor_rat(b * lead_abs);
  for (Int k = lo; k <= hi; ++k) {
    Rat cand(k, lead_abs.get_num());
    cand.canonicalize();
    if (cand > a && cand <= b && f(cand) == 0) roots.push_back(cand);
  }
}

std::vector<Rat> squarefree_rational_roots(const UniPoly& sqf) {
  std::vector<Rat> roots;
  if (sqf.degree() < 1) return roots;
  const UniPoly f = sqf.primitive_part();
  const auto seq = sturm_sequence(f);
  const Rat bound = cauchy_bound(f);
  const int total = sign_changes(seq, -bound) - sign_changes(seq, bound);
  isolate(seq, f, abs(f.leading()), -bound, bound, total, roots);
  return roots;
}

}  // namespace

int count_real_roots(const UniPoly& f, const Rat& a, const Rat& b) {
  const auto seq = sturm_sequence(f);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw domain_error("rational roots of the zero polynomial");
  std::vector<Rat> out;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    // Linear factors need no search.
    std::vector<Rat> roots = factor.degree() == 1 ? std::vector<Rat>{-factor.coeff(0) / factor.coeff(1)}
                                                  : squarefree_rational_roots(factor);
    for (const auto& r : roots)
      for (int i = 0; i < mult; ++i) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------ BiPoly

int BiPoly::degree() const {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (!coeffs[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

void BiPoly::trim() { coeffs.resize(static_cast<std::size_t>(degree() + 1)); }

UniPoly BiPoly::specialize(const Rat& t) const {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(c(t));
  return UniPoly(std::move(v));
}

UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(Rat(1));
  UniPoly prev = UniPoly::constant(Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        UniPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.degree() == 0 ? v * (Rat(1) / prev.leading()) : exact_div(v, prev);
      }
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

namespace {

// Rows: shifts x^{rows_f-1}..x^0 of f, then of g. Column c is the power
// width-1-c of the main variable.
std::vector<std::vector<UniPoly>> sylvester_rows(const BiPoly& f, const BiPoly& g, int rows_f, int rows_g,
                                                 int width) {
  std::vector<std::vector<UniPoly>> m;
  auto push = [&](const BiPoly& p, int rows) {
    const int dp = p.degree();
    for (int r = 0; r < rows; ++r) {
      std::vector<UniPoly> row(static_cast<std::size_t>(width));
      const int shift = rows - 1 - r;
      for (int i = 0; i <= dp; ++i) {
        const int power = i + shift;
        row[static_cast<std::size_t>(width - 1 - power)] = p.coeffs[static_cast<std::size_t>(i)];
      }
      m.push_back(std::move(row));
    }
  };
  push(f, rows_f);
  push(g, rows_g);
  return m;
}

}  // namespace

UniPoly poly_resultant(const BiPoly& f, const BiPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 || n < 0) throw domain_error("resultant of a zero polynomial");
  if (m == 0 && n == 0) throw domain_error("nothing to eliminate");
  if (m == 0) return pow(f.coeffs[0], static_cast<unsigned>(n));
  if (n == 0) return pow(g.coeffs[0], static_cast<unsigned>(m));
  return bareiss_determinant(sylvester_rows(f, g, n, m, m + n));
}

std::vector<UniPoly> subresultant(const BiPoly& f, const BiPoly& g, int k) {
  const int m = f.degree();
  const int n = g.degree();
  if (k < 0 || k >= std::min(m, n)) throw domain_error("subresultant index out of range");
  const int width = m + n - k;  // powers m+n-k-1 .. 0
  const auto full = sylvester_rows(f, g, n - k, m - k, width);
  std::vector<UniPoly> out;
  for (int power = 0; power <= k; ++power) {
    std::vector<std::vector<UniPoly>> sq;
    sq.reserve(full.size());
    for (const auto& row : full) {
      std::vector<UniPoly> r(row.begin(), row.begin() + (width - k - 1));
      r.push_back(row[static_cast<std::size_t>(width - 1 - power)]);
      sq.push_back(std::move(r));
    }
    out.push_back(bareiss_determinant(std::move(sq)));
  }
  return out;
}

// ------------------------------------------------------------ PlaceCluster

PlaceCluster PlaceCluster::finite(const UniPoly& defining_poly) {
  if (defining_poly.degree() < 1) throw domain_error("place cluster needs a nonconstant polynomial");
  PlaceCluster p;
  p.kind_ = Kind::Finite;
  p.poly_ = defining_poly.monic();
  if (!gcd(p.poly_, p.poly_.derivative()).is_constant())
    throw domain_error("place cluster polynomial must be squarefree");
  return p;
}

std::string PlaceCluster::to_string(char var) const {
  if (is_infinity()) return "inf";
  return poly_.to_string(var);
}

bool PlaceCluster::operator<(const PlaceCluster& other) const {
  if (is_infinity() != other.is_infinity()) return other.is_infinity();
  if (is_infinity()) return false;
  if (poly_.degree() != other.poly_.degree()) return poly_.degree() < other.poly_.degree();
  for (int i = poly_.degree(); i >= 0; --i) {
    const Rat a = poly_.coeff(i), b = other.poly_.coeff(i);
    if (a != b) return a < b;
  }
  return false;
}

int valuation(const UniPoly& f, const PlaceCluster& place) {
  if (f.is_zero()) throw domain_error("valuation of zero");
  if (place.is_infinity()) throw domain_error("infinite place: use model inversion");
  int n = 0;
  UniPoly cur = f;
  while (true) {
    auto [q, r] = divmod(cur, place.defining_poly());
    if (!r.is_zero()) return n;
    cur = std::move(q);
    ++n;
  }
}

std::vector<std::pair<UniPoly, int>> valuation_split(const UniPoly& cluster, const UniPoly& f) {
  if (f.is_zero()) throw domain_error("valuation of zero");
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly rest = cluster.monic();
  UniPoly cur = f;
  int level = 0;
  while (rest.degree() >= 1) {
    auto [hit, miss] = gcd_split(rest, cur);
    if (miss.degree() >= 1) out.emplace_back(miss, level);
    if (hit.degree() < 1) break;
    cur = exact_div(cur, hit);
    rest = hit;
    ++level;
  }
  return out;
}

}  // namespace cubicmw
