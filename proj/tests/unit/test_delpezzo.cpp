#include <doctest.h>

#include <cubicmw/delpezzo.hpp>

#include <algorithm>

using namespace cubicmw;

TEST_CASE("degrees") {
  CHECK(degree(8) == 1);
  CHECK(degree(6) == 3);
  CHECK(degree(1) == 8);
  CHECK_THROWS_AS(degree(9), Error);
  CHECK_THROWS_AS(degree(0), Error);
}

TEST_CASE("(-1)-class counts") {
  CHECK(minus_one_classes(8).size() == 240);
  CHECK(minus_one_classes(7).size() == 56);
  CHECK(minus_one_classes(6).size() == 27);
  const auto one = minus_one_classes(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == PicClass{0, {-1}});
  std::size_t prev = 0;
  for (int m = 1; m <= 8; ++m) {
    const auto cs = minus_one_classes(m);
    CHECK(cs.size() > prev);
    prev = cs.size();
    CHECK(std::is_sorted(cs.begin(), cs.end()));
    for (const auto& c : cs) {
      CHECK(c.self_intersection() == -1);
      CHECK(c.canonical_degree() == 1);
    }
  }
  CHECK_THROWS_AS(minus_one_classes(9), Error);
}

TEST_CASE("degree one classes") {
  const auto cs = minus_one_classes(8);
  int exceptional = 0, lines = 0;
  for (const auto& c : cs) {
    if (c.a == 0) ++exceptional;
    if (c.a == 1) {
      CHECK(std::count(c.b.begin(), c.b.end(), 1) == 2);
      ++lines;
    }
    // Permuting the points permutes the classes.
    PicClass swapped = c;
    std::swap(swapped.b[0], swapped.b[7]);
    CHECK(std::binary_search(cs.begin(), cs.end(), swapped));
  }
  CHECK(exceptional == 8);
  CHECK(lines == 28);
  CHECK(cs.back().a == 6);
}

TEST_CASE("comparison with lattice counts") {
  CHECK(cross_validate_counts(8));
  CHECK(cross_validate_counts(7));
  // E6 dual has 54 vectors of norm 4/3, two classes of 27.
  CHECK(lattice_count(6) == 54);
  CHECK_FALSE(cross_validate_counts(6));
  CHECK_THROWS_AS(lattice_count(5), Error);
}
