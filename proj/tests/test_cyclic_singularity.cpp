#include <doctest.h>

#include <numeric>
#include <string>

#include "oracles.hpp"
#include "symsig/cyclic_singularity.hpp"
#include "symsig/errors.hpp"

using namespace symsig;

TEST_CASE("validate") {
  CHECK(validate(5, 2).n() == 5);
  CHECK(validate(2, 1).a() == 1);
  CHECK_THROWS_AS(validate(4, 2), ValidationError);
  CHECK_THROWS_AS(validate(1, 1), ValidationError);
  CHECK_THROWS_AS(validate(5, 0), ValidationError);
  CHECK_THROWS_AS(validate(5, 5), ValidationError);
  CHECK_THROWS_AS(validate(5, -2), ValidationError);
  try {
    validate(4, 2);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("coprime") != std::string::npos);
    CHECK(std::string(e.what()).find("pseudo-reflections") != std::string::npos);
  }
}

TEST_CASE("invariance and weights") {
  const auto t = validate(5, 2);
  CHECK(is_invariant(t, {3, 1}));
  CHECK_FALSE(is_invariant(t, {1, 1}));
  CHECK(weight(t, {5, 1}) == 2);
  for (std::int64_t n = 2; n <= 15; ++n)
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto s = validate(n, a);
      CHECK(is_invariant(s, {n, 0}));
      CHECK(weight(s, {1, 0}) == 1);
      CHECK(weight(s, {0, 1}) == a);
    }
}

TEST_CASE("minimal generators of small singularities") {
  using M = MonomialExponent;
  CHECK(oracle::staircase_by_enumeration(5, 2) == std::vector<M>{{5, 0}, {3, 1}, {1, 2}, {0, 5}});
  CHECK(minimal_generators(validate(5, 2)).generators == std::vector<M>{{5, 0}, {3, 1}, {1, 2}, {0, 5}});
  CHECK(oracle::staircase_by_enumeration(2, 1) == std::vector<M>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(minimal_generators(validate(2, 1)).generators == std::vector<M>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("staircase agrees with the enumeration oracle and its structural properties") {
  for (std::int64_t n = 2; n <= 40; ++n)
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto t = validate(n, a);
      const auto s = minimal_generators(t);
      CAPTURE(n);
      CAPTURE(a);
      REQUIRE(s.generators == oracle::staircase_by_enumeration(n, a));
      CHECK(s.size() >= 3);
      CHECK(s.size() <= static_cast<std::size_t>(n + 1));
      CHECK(s[0] == MonomialExponent{n, 0});
      CHECK(s[1] == MonomialExponent{n - a, 1});
      CHECK(s.generators.back() == MonomialExponent{0, n});
      for (std::size_t x = 0; x < s.size(); ++x) {
        CHECK(weight(t, s[x]) == 0);
        for (std::size_t y = 0; y < s.size(); ++y)
          if (x != y) CHECK_FALSE(divides(s[x], s[y]));
      }
      if (a == n - 1) CHECK(s.generators == std::vector<MonomialExponent>{{n, 0}, {1, 1}, {0, n}});
    }
}

TEST_CASE("staircase generates every invariant monomial in the box [0, 2n]^2") {
  for (std::int64_t n = 2; n <= 13; ++n)
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto t = validate(n, a);
      const auto s = minimal_generators(t);
      const std::int64_t box = 2 * n;
      // reachable[i][j]: u^i v^j is a product of generators
      std::vector<std::vector<bool>> reachable(box + 1, std::vector<bool>(box + 1, false));
      reachable[0][0] = true;
      for (std::int64_t i = 0; i <= box; ++i)
        for (std::int64_t j = 0; j <= box; ++j)
          for (const auto& p : s.generators)
            if (p.i <= i && p.j <= j && reachable[i - p.i][j - p.j]) reachable[i][j] = true;
      for (std::int64_t i = 0; i <= box; ++i)
        for (std::int64_t j = 0; j <= box; ++j)
          CHECK(reachable[i][j] == is_invariant(t, {i, j}));
    }
}
