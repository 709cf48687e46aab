#pragma once

// The cyclic quotient singularity of type 1/n(1,a): the group Z/n acts on
// k[[u,v]] by u -> xi u, v -> xi^a v. Invariant monomials are u^i v^j with
// i + a j = 0 (mod n).

#include <compare>
#include <cstdint>
#include <vector>

namespace symsig {

class CyclicType {
 public:
  std::int64_t n() const { return n_; }
  std::int64_t a() const { return a_; }

  friend CyclicType validate(std::int64_t n, std::int64_t a);
  friend bool operator==(const CyclicType&, const CyclicType&) = default;

 private:
  CyclicType(std::int64_t n, std::int64_t a) : n_(n), a_(a) {}
  std::int64_t n_;
  std::int64_t a_;
};

/// Largest group order accepted; keeps a*j and i + a*j inside 64 bits.
inline constexpr std::int64_t kMaxGroupOrder = std::int64_t{1} << 30;

/// Checks 2 <= n <= kMaxGroupOrder, 1 <= a < n and gcd(a, n) == 1; throws
/// ValidationError otherwise. A common factor means the group contains
/// pseudo-reflections.
CyclicType validate(std::int64_t n, std::int64_t a);

struct MonomialExponent {
  std::int64_t i = 0;  // exponent of u
  std::int64_t j = 0;  // exponent of v

  friend auto operator<=>(const MonomialExponent&, const MonomialExponent&) = default;
};

/// Componentwise divisibility u^i v^j | u^i' v^j'.
inline bool divides(const MonomialExponent& lhs, const MonomialExponent& rhs) {
  return lhs.i <= rhs.i && lhs.j <= rhs.j;
}

/// Componentwise maximum, i.e. the exponent of lcm(u^i v^j, u^i' v^j').
inline MonomialExponent lcm(const MonomialExponent& lhs, const MonomialExponent& rhs) {
  return {lhs.i > rhs.i ? lhs.i : rhs.i, lhs.j > rhs.j ? lhs.j : rhs.j};
}

/// Minimal monomial generators of the maximal ideal of the invariant ring,
/// ordered by strictly decreasing exponent of u. Starts with (n, 0), (n - a, 1)
/// and ends with (0, n).
struct Staircase {
  std::vector<MonomialExponent> generators;

  std::size_t size() const { return generators.size(); }
  const MonomialExponent& operator[](std::size_t k) const { return generators[k]; }
};

/// Character of u^i v^j: (i + a j) mod n.
std::int64_t weight(const CyclicType& t, const MonomialExponent& m);

bool is_invariant(const CyclicType& t, const MonomialExponent& m);

Staircase minimal_generators(const CyclicType& t);

}  // namespace symsig
