#include "symsig/syzygy_rep.hpp"

#include <numeric>

namespace symsig {

SyzygyRepresentation syzygy_weights(const CyclicType& t) {
  const Staircase stairs = minimal_generators(t);
  SyzygyRepresentation rep{t, {}};
  rep.weights.reserve(stairs.size() - 1);
  for (std::size_t k = 0; k + 1 < stairs.size(); ++k) rep.weights.push_back(weight(t, lcm(stairs[k], stairs[k + 1])));
  return rep;
}

bool is_faithful(std::int64_t n, std::span<const std::int64_t> weights) {
  std::int64_t g = n;
  for (std::int64_t w : weights) g = std::gcd(g, w);
  return g == 1;
}

bool is_faithful(const SyzygyRepresentation& rep) { return is_faithful(rep.singularity.n(), rep.weights); }

DiagonalRepresentation to_diagonal(const SyzygyRepresentation& rep) {
  std::vector<Character> chars;
  chars.reserve(rep.weights.size());
  for (std::int64_t w : rep.weights) chars.push_back(Character{{w}});
  return DiagonalRepresentation(AbelianGroup::cyclic(rep.singularity.n()), std::move(chars));
}

}  // namespace symsig
