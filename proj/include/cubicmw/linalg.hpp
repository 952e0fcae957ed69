#ifndef CUBICMW_LINALG_HPP
#define CUBICMW_LINALG_HPP

#include <cubicmw/rational.hpp>

#include <vector>

namespace cubicmw {

using RatVector = std::vector<Rat>;
using RatMatrix = std::vector<RatVector>;
using IntMatrix = std::vector<std::vector<Int>>;

Rat determinant(RatMatrix m);
RatMatrix inverse(const RatMatrix& m);
/// Basis of {v : m v = 0}, one vector per free column, in reduced form.
std::vector<RatVector> nullspace(const RatMatrix& m);
int rank(const RatMatrix& m);
RatMatrix transpose(const RatMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& a, const RatVector& v);
RatMatrix identity_matrix(std::size_t n);

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries
/// only, each dividing the next).
std::vector<Int> smith_diagonal(IntMatrix m);

}  // namespace cubicmw

#endif  // CUBICMW_LINALG_HPP
