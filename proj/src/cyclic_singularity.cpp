#include "symsig/cyclic_singularity.hpp"

#include <numeric>
#include <string>

#include "symsig/errors.hpp"
#include "symsig/exact_arith.hpp"

namespace symsig {

CyclicType validate(std::int64_t n, std::int64_t a) {
  if (n < 2) throw ValidationError("group order n must be at least 2 (got " + std::to_string(n) + ")");
  if (n > kMaxGroupOrder)
    throw ValidationError("group order n must not exceed " + std::to_string(kMaxGroupOrder));
  if (a < 1 || a >= n)
    throw ValidationError("action exponent a must satisfy 1 <= a < n (got a=" + std::to_string(a) +
                          ", n=" + std::to_string(n) + ")");
  if (const auto g = std::gcd(a, n); g != 1)
    throw ValidationError("a and n must be coprime (gcd = " + std::to_string(g) +
                          "): the group is not small, it contains pseudo-reflections");
  return CyclicType(n, a);
}

std::int64_t weight(const CyclicType& t, const MonomialExponent& m) {
  const std::int64_t n = t.n();
  return mod_floor(mod_floor(m.i, n) + mod_floor(t.a() * mod_floor(m.j, n), n), n);
}

bool is_invariant(const CyclicType& t, const MonomialExponent& m) { return weight(t, m) == 0; }

Staircase minimal_generators(const CyclicType& t) {
  // For each j the smallest invariant exponent of u is (-a j) mod n, with
  // j = 0 contributing u^n. A column is a corner of the staircase exactly when
  // that exponent drops below every corner found at smaller j; the walk ends
  // at (0, n) since a is a unit mod n.
  const std::int64_t n = t.n();
  const std::int64_t a = t.a();
  Staircase out;
  out.generators.push_back({n, 0});
  std::int64_t last_i = n;
  for (std::int64_t j = 1; last_i > 0; ++j) {
    const std::int64_t i = mod_floor(-a * j, n);
    if (i < last_i) {
      out.generators.push_back({i, j});
      last_i = i;
    }
  }
  return out;
}

}  // namespace symsig
