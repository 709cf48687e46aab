#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "symsig/syzygy_rep.hpp"

using namespace symsig;

namespace {

// weight of lcm of consecutive oracle staircase entries, computed by hand
std::vector<std::int64_t> weights_from_oracle(std::int64_t n, std::int64_t a) {
  const auto stairs = oracle::staircase_by_enumeration(n, a);
  std::vector<std::int64_t> out;
  for (std::size_t k = 0; k + 1 < stairs.size(); ++k) {
    const std::int64_t i = std::max(stairs[k].i, stairs[k + 1].i);
    const std::int64_t j = std::max(stairs[k].j, stairs[k + 1].j);
    out.push_back((i + a * j) % n);
  }
  return out;
}

}  // namespace

TEST_CASE("syzygy weights of small singularities") {
  CHECK(weights_from_oracle(5, 2) == std::vector<std::int64_t>{2, 2, 1});
  CHECK(syzygy_weights(validate(5, 2)).weights == std::vector<std::int64_t>{2, 2, 1});
  CHECK(weights_from_oracle(2, 1) == std::vector<std::int64_t>{1, 1});
  CHECK(syzygy_weights(validate(2, 1)).weights == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("is_faithful") {
  CHECK(is_faithful(syzygy_weights(validate(5, 2))));
  const std::int64_t one[] = {1};
  const std::int64_t two[] = {2};
  CHECK(is_faithful(7, one));
  CHECK_FALSE(is_faithful(4, two));
  const SyzygyRepresentation synthetic{validate(4, 1), {2}};
  CHECK_FALSE(is_faithful(synthetic));
}

TEST_CASE("syzygy representation properties for n <= 60") {
  for (std::int64_t n = 2; n <= 60; ++n)
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const auto t = validate(n, a);
      const auto rep = syzygy_weights(t);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(is_faithful(rep));
      CHECK(rep.dimension() + 1 == minimal_generators(t).size());
      CHECK(rep.weights.front() == a % n);
      if (n <= 30) CHECK(rep.weights == weights_from_oracle(n, a));
      if (a == n - 1) {
        CHECK(rep.dimension() == 2);
        // lcms (n,1) and (1,n): weights n - 1 and 1 + n(n - 1) = 1, i.e. the
        // weights of v and u
        CHECK(rep.weights == std::vector<std::int64_t>{n - 1, 1});
      }
    }
}

TEST_CASE("diagonal form keeps the weights") {
  const auto d = to_diagonal(syzygy_weights(validate(5, 2)));
  CHECK(d.group().order() == 5);
  CHECK(d.dimension() == 3);
  CHECK(d.weights()[2] == Character{{1}});
}
