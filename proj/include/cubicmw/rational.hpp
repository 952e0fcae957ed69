#ifndef CUBICMW_RATIONAL_HPP
#define CUBICMW_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicmw {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) as long as every constructor path goes through make_rat or
// canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

/// Base class for every error raised by the library. The kind lets front
/// ends map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  enum class Kind { Domain, Parse, InvalidPencil, NotElliptic, InconsistentSurface, Unsupported };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline Error domain_error(const std::string& what) { return Error(Error::Kind::Domain, what); }

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
Rat parse_rat(std::string_view text);

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline int sign(const Rat& r) { return sgn(r); }

// floor and ceil of a rational as an integer
Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

}  // namespace cubicmw

#endif  // CUBICMW_RATIONAL_HPP
