#include <doctest.h>

#include <cubicmw/lattices.hpp>

#include "test_helpers.hpp"

using namespace cubicmw;
using namespace cubicmw::testing;

namespace {

RatMatrix rows(std::initializer_list<std::initializer_list<const char*>> r) {
  RatMatrix m;
  for (const auto& row : r) {
    m.emplace_back();
    for (const char* e : row) m.back().push_back(q(e));
  }
  return m;
}

const GramMatrix& e7() {
  static const GramMatrix g = root_gram(RootLatticeId(RootFamily::E, 7));
  return g;
}

}  // namespace

TEST_CASE("E7 root Gram matrix") {
  CHECK(e7().entries() == rows({{"2", "-1", "0", "0", "0", "0", "0"},
                                {"-1", "2", "-1", "0", "0", "0", "0"},
                                {"0", "-1", "2", "-1", "0", "0", "-1"},
                                {"0", "0", "-1", "2", "-1", "0", "0"},
                                {"0", "0", "0", "-1", "2", "-1", "0"},
                                {"0", "0", "0", "0", "-1", "2", "0"},
                                {"0", "0", "-1", "0", "0", "0", "2"}}));
  CHECK(root_gram(RootLatticeId(RootFamily::A, 1)).entries() == rows({{"2"}}));
}

TEST_CASE("E7 dual Gram matrix") {
  CHECK(dual_gram(e7()).entries() == rows({{"2", "3", "4", "3", "2", "1", "2"},
                                           {"3", "6", "8", "6", "4", "2", "4"},
                                           {"4", "8", "12", "9", "6", "3", "6"},
                                           {"3", "6", "9", "15/2", "5", "5/2", "9/2"},
                                           {"2", "4", "6", "5", "4", "2", "3"},
                                           {"1", "2", "3", "5/2", "2", "3/2", "3/2"},
                                           {"2", "4", "6", "9/2", "3", "3/2", "7/2"}}));
  CHECK(dual_gram(GramMatrix(rows({{"2"}}))).entries() == rows({{"1/2"}}));
  CHECK(dual_gram(dual_gram(e7())) == e7());
}

TEST_CASE("determinants and discriminant groups") {
  const auto e = [](int r) { return root_gram(RootLatticeId(RootFamily::E, r)); };
  CHECK(e(6).determinant() == 3);
  CHECK(e(7).determinant() == 2);
  CHECK(e(8).determinant() == 1);
  CHECK(discriminant_group(e(8)).is_trivial());
  CHECK(discriminant_group(e(7)).invariant_factors == std::vector<Int>{2});
  CHECK(discriminant_group(e(6)).invariant_factors == std::vector<Int>{3});
  CHECK(discriminant_group(root_gram(RootLatticeId(RootFamily::D, 4))).to_string() == "Z/2 x Z/2");
  CHECK(discriminant_group(root_gram(RootLatticeId(RootFamily::D, 5))).to_string() == "Z/4");
  for (int n = 1; n <= 6; ++n) {
    const GramMatrix a = root_gram(RootLatticeId(RootFamily::A, n));
    CHECK(Rat(discriminant_group(a).order()) == a.determinant());
  }
  CHECK_THROWS_AS(discriminant_group(dual_gram(e(7))), Error);
}

TEST_CASE("invalid lattices") {
  CHECK_THROWS_AS(RootLatticeId(RootFamily::E, 9), Error);
  CHECK_THROWS_AS(RootLatticeId(RootFamily::D, 3), Error);
  CHECK_THROWS_AS(GramMatrix(rows({{"1", "2"}, {"2", "1"}})), Error);
  CHECK_THROWS_AS(GramMatrix(rows({{"1", "0"}, {"1", "1"}})), Error);
  CHECK(LatticeName::parse("E7v").to_string() == "E7v");
  CHECK(LatticeName::parse("D4").id == RootLatticeId(RootFamily::D, 4));
  CHECK_THROWS_AS(LatticeName::parse("F4"), Error);
}

TEST_CASE("minimal vector counts") {
  const GramMatrix e8 = root_gram(RootLatticeId(RootFamily::E, 8));
  const auto roots = minimal_vectors(e8, Rat(2));
  CHECK(roots.size() == 240);
  CHECK(minimal_vectors(dual_gram(e7()), q("3/2"), Basis::Dual).size() == 56);
  CHECK(minimal_vectors(e7(), Rat(2)).size() == 126);
  CHECK(minimal_vectors(root_gram(RootLatticeId(RootFamily::E, 6)), Rat(2)).size() == 72);
  // Both nontrivial classes of E6 dual modulo E6 contribute 27 vectors.
  CHECK(minimal_vectors(dual_gram(root_gram(RootLatticeId(RootFamily::E, 6))), q("4/3"), Basis::Dual).size() == 54);
  CHECK(minimal_vectors(root_gram(RootLatticeId(RootFamily::A, 2)), Rat(2)).size() == 6);
  CHECK(minimal_vectors(e8, Rat(1)).empty());
  CHECK_THROWS_AS(minimal_vectors(e8, Rat(0)), Error);
}

TEST_CASE("minimal vectors are exact, sorted and symmetric") {
  const GramMatrix g = dual_gram(e7());
  const auto vs = minimal_vectors(g, q("3/2"), Basis::Dual);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    CHECK(g.pairing(vs[i].coords, vs[i].coords) == q("3/2"));
    CHECK(vs[i].basis == Basis::Dual);
    if (i > 0) CHECK(vs[i - 1].coords < vs[i].coords);
    RatVector neg = vs[i].coords;
    for (auto& c : neg) c = -c;
    CHECK(std::binary_search(vs.begin(), vs.end(), LatticeVector{neg, Basis::Dual},
                             [](const LatticeVector& a, const LatticeVector& b) { return a.coords < b.coords; }));
  }
  // Four times A1 at norm 2 is the 8 coordinate vectors up to sign.
  const GramMatrix a1x4(rows({{"2", "0", "0", "0"}, {"0", "2", "0", "0"}, {"0", "0", "2", "0"}, {"0", "0", "0", "2"}}));
  CHECK(minimal_vectors(a1x4, Rat(2)).size() == 8);
  CHECK(minimal_vectors(a1x4, Rat(4)).size() == 24);
}

TEST_CASE("basis change to the dual basis") {
  const RatVector alpha1{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
  CHECK(basis_change_to_dual({alpha1, Basis::Root}, e7()).coords ==
        RatVector{Rat(2), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK(basis_change_to_dual({RatVector(7), Basis::Root}, e7()).coords == RatVector(7));
  CHECK_THROWS_AS(basis_change_to_dual({RatVector(3), Basis::Root}, e7()), Error);

  // beta_6 paired with the chain sums P_i = alpha_1 + ... + alpha_i, computed
  // through the dual Gram matrix; it picks out the coefficient of alpha_6.
  const GramMatrix dual = dual_gram(e7());
  RatVector p(7);
  for (std::size_t i = 0; i < 6; ++i) {
    p[i] = 1;
    const RatVector beta_coords = basis_change_to_dual({p, Basis::Root}, e7()).coords;
    RatVector beta6(7);
    beta6[5] = 1;
    const Rat via_dual = dual.pairing(beta6, beta_coords);
    CHECK(via_dual == p[5]);
    CHECK(via_dual == (i == 5 ? 1 : 0));
  }
  RatVector beta6(7);
  beta6[5] = 1;
  CHECK(dual.pairing(beta6, beta6) == q("3/2"));
}
