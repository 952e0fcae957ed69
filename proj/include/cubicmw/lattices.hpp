#ifndef CUBICMW_LATTICES_HPP
#define CUBICMW_LATTICES_HPP

#include <cubicmw/linalg.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cubicmw {

enum class RootFamily { A, D, E };

struct RootLatticeId {
  RootFamily family = RootFamily::A;
  int rank = 1;

  /// Throws on ranks outside A_n (n >= 1), D_n (n >= 4), E_6..E_8.
  RootLatticeId(RootFamily f, int r);
  static RootLatticeId parse(std::string_view text);  // "A1", "D4", "E8"
  std::string to_string() const;

  auto operator<=>(const RootLatticeId&) const = default;
};

/// A root lattice or its dual, written "E7" or "E7v".
struct LatticeName {
  RootLatticeId id;
  bool dual = false;

  static LatticeName parse(std::string_view text);
  std::string to_string() const { return id.to_string() + (dual ? "v" : ""); }
};

/// Symmetric positive definite rational matrix.
class GramMatrix {
 public:
  explicit GramMatrix(RatMatrix entries);

  std::size_t rank() const { return entries_.size(); }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const RatMatrix& entries() const { return entries_; }
  bool is_integral() const;
  Rat determinant() const;
  Rat pairing(const RatVector& u, const RatVector& v) const;

  bool operator==(const GramMatrix&) const = default;

 private:
  RatMatrix entries_;
};

enum class Basis { Root, Dual };

struct LatticeVector {
  RatVector coords;
  Basis basis = Basis::Root;

  bool operator==(const LatticeVector&) const = default;
};

/// Invariant factors d1 | d2 | ..., each at least 2.
struct AbelianGroupDescriptor {
  std::vector<Int> invariant_factors;

  bool is_trivial() const { return invariant_factors.empty(); }
  Int order() const;
  std::string to_string() const;  // "0", "Z/2", "Z/2 x Z/4"

  bool operator==(const AbelianGroupDescriptor&) const = default;
};

/// Gram matrix in the basis of simple roots. E_r uses the chain 1..r-1 with
/// node r attached to node 3. In Bourbaki labels that is 1,3,4,...,r for the
/// chain and 2 for the extra node. A_n is a path; D_n is the path 1..n-1
/// with node n attached to node n-2.
GramMatrix root_gram(const RootLatticeId& id);
GramMatrix lattice_gram(const LatticeName& name);

/// Gram matrix of the dual basis (the inverse matrix).
GramMatrix dual_gram(const GramMatrix& g);

AbelianGroupDescriptor discriminant_group(const GramMatrix& g);

/// Every integer vector x with x^T g x = norm, in lexicographic order.
/// The basis tag is attached to the output unchanged.
std::vector<LatticeVector> minimal_vectors(const GramMatrix& g, const Rat& norm, Basis basis = Basis::Root);

/// Root coordinates c to dual coordinates g c.
LatticeVector basis_change_to_dual(const LatticeVector& v, const GramMatrix& g);

}  // namespace cubicmw

#endif  // CUBICMW_LATTICES_HPP
