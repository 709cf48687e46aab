#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "symsig/errors.hpp"
#include "symsig/lattice_counting.hpp"
#include "symsig/syzygy_rep.hpp"

using namespace symsig;

namespace {

DiagonalRepresentation cyclic_rep(std::int64_t n, std::vector<std::int64_t> weights) {
  std::vector<Character> chars;
  for (auto w : weights) chars.push_back(Character{{w}});
  return DiagonalRepresentation(AbelianGroup::cyclic(n), chars);
}

std::vector<BigInt> big(std::initializer_list<long> xs) { return std::vector<BigInt>(xs.begin(), xs.end()); }

std::vector<BigInt> column(const IntegerMatrix& m, std::size_t c) {
  std::vector<BigInt> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, c));
  return out;
}

}  // namespace

TEST_CASE("kernel lattice examples") {
  for (std::int64_t n = 2; n <= 9; ++n) {
    const auto lat = kernel_lattice(cyclic_rep(n, {1}));
    CHECK(lat.index == n);
    CHECK(abs(lat.basis(0, 0)) == n);
  }

  const auto even = kernel_lattice(cyclic_rep(2, {1, 1}));
  CHECK(even.index == 2);
  CHECK(lattice_contains(even, big({1, 1})));
  CHECK(lattice_contains(even, big({2, 0})));
  CHECK(lattice_contains(even, big({-3, 1})));
  CHECK_FALSE(lattice_contains(even, big({1, 0})));
  CHECK_FALSE(lattice_contains(even, big({0, -1})));

  const auto rep52 = cyclic_rep(5, {2, 2, 1});
  const auto lat52 = kernel_lattice(rep52);
  CHECK(lat52.index == 5);
  CHECK(subgroup_order(rep52.weights(), rep52.group()) == 5);
}

TEST_CASE("index_of_lattice") {
  CHECK(index_of_lattice(IntegerMatrix{{7}}) == 7);
  CHECK(index_of_lattice(IntegerMatrix{{1, 0}, {0, 6}}) == 6);
  CHECK(oracle::cofactor_det(IntegerMatrix{{2, 0}, {1, 3}}) == 6);
  CHECK(index_of_lattice(IntegerMatrix{{2, 0}, {1, 3}}) == 6);
  CHECK_THROWS_AS(index_of_lattice(IntegerMatrix{{2, 4}, {1, 2}}), ValidationError);
  const auto lat = kernel_lattice(cyclic_rep(5, {2, 2, 1}));
  CHECK(index_of_lattice(lat) == lat.index);
}

TEST_CASE("index equals subgroup order for random weight lists") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> n_dist(2, 8);
  std::uniform_int_distribution<std::size_t> k_dist(1, 3), nu_dist(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t n = n_dist(rng);
    const std::size_t k = k_dist(rng);
    const AbelianGroup group(std::vector<std::int64_t>(k, n));
    std::vector<Character> weights(nu_dist(rng));
    for (auto& w : weights)
      for (std::size_t j = 0; j < k; ++j) w.components.push_back(std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng));
    const DiagonalRepresentation rep(group, weights);
    const auto lat = kernel_lattice(rep);
    CHECK(index_of_lattice(lat) == subgroup_order(weights, group));
    CHECK(abs(oracle::cofactor_det(lat.basis)) == lat.index);
    for (std::size_t c = 0; c < lat.ambient_dim; ++c) CHECK(weight_map(rep, column(lat.basis, c)) == group.zero());
    CHECK(is_faithful(rep) == (lat.index == group.order()));
  }
}

TEST_CASE("syzygy representations have index n") {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto rep = to_diagonal(syzygy_weights(validate(n, a)));
      CHECK(kernel_lattice(rep).index == n);
    }
}

TEST_CASE("coset representatives") {
  const auto rep52 = cyclic_rep(5, {2, 2, 1});
  CHECK(coset_representative(rep52, Character{{0}})->a0 == std::vector<std::int64_t>{0, 0, 0});
  CHECK(coset_representative(rep52, Character{{1}})->a0 == std::vector<std::int64_t>{0, 0, 1});
  // e_1 and e_2 both have weight 2; (0,1,0) is the lexicographically smaller
  CHECK(coset_representative(rep52, Character{{2}})->a0 == std::vector<std::int64_t>{0, 1, 0});
  // 3 = 2 + 1 in degree 2; (0,1,1) is lexicographically below (1,0,1)
  CHECK(coset_representative(rep52, Character{{3}})->a0 == std::vector<std::int64_t>{0, 1, 1});
  CHECK_FALSE(coset_representative(cyclic_rep(4, {2}), Character{{1}}).has_value());

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(2, 9)(rng);
    std::vector<std::int64_t> ws(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
    std::vector<std::vector<std::int64_t>> wvec;
    for (auto& w : ws) {
      w = std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng);
      wvec.push_back({w});
    }
    const auto rep = cyclic_rep(n, ws);
    for (std::int64_t chi = 0; chi < n; ++chi) {
      const auto a0 = coset_representative(rep, Character{{chi}});
      // least degree at which chi occurs, by brute force
      std::optional<std::uint64_t> least;
      for (std::uint64_t q = 0; q < static_cast<std::uint64_t>(n) && !least; ++q)
        if (oracle::direct_multiplicity({n}, wvec, {chi}, q) > 0) least = q;
      REQUIRE(a0.has_value() == least.has_value());
      if (!a0) continue;
      CHECK(rep.character_of(a0->a0) == Character{{chi}});
      CHECK(std::accumulate(a0->a0.begin(), a0->a0.end(), std::int64_t{0}) == static_cast<std::int64_t>(*least));
    }
  }
}

TEST_CASE("count_coset_points") {
  SUBCASE("full lattice gives all simplex points") {
    for (std::size_t nu = 1; nu <= 5; ++nu) {
      std::vector<Character> zeros(nu, Character{{0}});
      const DiagonalRepresentation trivial(AbelianGroup({1}), zeros);
      const auto lat = kernel_lattice(trivial);
      CHECK(lat.index == 1);
      const CosetPoint origin{std::vector<std::int64_t>(nu, 0)};
      for (std::uint64_t n = 0; n <= 30; ++n) CHECK(count_coset_points(lat, origin, n) == binomial(n + nu, nu));
      for (std::uint64_t n = 0; n <= 6; ++n)
        CHECK(count_coset_points_by_enumeration(lat, origin, n) == binomial(n + nu, nu));
    }
  }
  SUBCASE("group with no moduli") {
    const DiagonalRepresentation trivial(AbelianGroup({}), {Character{}, Character{}});
    const auto lat = kernel_lattice(trivial);
    CHECK(lat.index == 1);
    CHECK(count_coset_points(lat, CosetPoint{{0, 0}}, 3) == 10);
  }
  SUBCASE("even points in the dilated triangle") {
    const auto rep = cyclic_rep(2, {1, 1});
    const auto lat = kernel_lattice(rep);
    const CosetPoint origin{{0, 0}};
    CHECK(count_coset_points(lat, origin, 4) == 9);
    CHECK(count_coset_points_by_enumeration(lat, origin, 4) == 9);
    // odd coset: degrees 1 and 3 contribute 2 + 4
    CHECK(count_coset_points(lat, CosetPoint{{1, 0}}, 4) == 6);
  }
  SUBCASE("(5,2) syzygy representation") {
    const auto rep = to_diagonal(syzygy_weights(validate(5, 2)));
    const auto lat = kernel_lattice(rep);
    BigInt everything = 0;
    for (std::int64_t chi = 0; chi < 5; ++chi) {
      const auto a0 = coset_representative(rep, Character{{chi}});
      REQUIRE(a0.has_value());
      BigInt by_degree = 0;
      for (std::uint64_t q = 0; q <= 20; ++q) by_degree += multiplicity(rep, Character{{chi}}, q);
      const BigInt counted = count_coset_points(lat, *a0, 20);
      CHECK(counted == by_degree);
      CHECK(count_coset_points_by_enumeration(lat, *a0, 12) == count_coset_points(lat, *a0, 12));
      everything += counted;
    }
    CHECK(everything == binomial(20 + 3, 3));
  }
}
