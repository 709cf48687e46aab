#pragma once

// Finite abelian groups Z/n_1 x ... x Z/n_k and diagonal representations
// given by a list of character weights. Characters are residue vectors; the
// identification of n-th roots of unity with Z/n is fixed once (xi -> 1), so
// all arithmetic here is exact integer arithmetic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symsig/exact_arith.hpp"

namespace symsig {

/// Residue vector; component j lives in Z/n_j. Also used for group elements,
/// since the character group of a finite abelian group has the same moduli.
struct Character {
  std::vector<std::int64_t> components;

  friend bool operator==(const Character&, const Character&) = default;
};

std::string to_string(const Character& c);

class AbelianGroup {
 public:
  /// Upper bound on the order of any group we build dense tables over.
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 26;

  explicit AbelianGroup(std::vector<std::int64_t> moduli);
  static AbelianGroup cyclic(std::int64_t n) { return AbelianGroup({n}); }

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::int64_t order() const { return order_; }

  /// Reduces every component into [0, n_j). Throws ValidationError when the
  /// number of components does not match the number of moduli.
  Character normalize(const Character& c) const;
  bool same_shape(const Character& c) const { return c.components.size() == moduli_.size(); }

  Character zero() const { return Character{std::vector<std::int64_t>(moduli_.size(), 0)}; }
  Character add(const Character& x, const Character& y) const;
  Character scale(const Character& x, std::int64_t k) const;
  /// shift[g] = index of element(g) + w, for every g.
  std::vector<std::size_t> translation(const Character& w) const;

  /// Mixed-radix position of a normalized element, in [0, order()).
  std::size_t index_of(const Character& c) const;
  Character element(std::size_t index) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
};

/// G acting diagonally on V = V_1 + ... + V_nu, G acting on V_i by weights[i].
class DiagonalRepresentation {
 public:
  DiagonalRepresentation(AbelianGroup group, std::vector<Character> weights);

  const AbelianGroup& group() const { return group_; }
  const std::vector<Character>& weights() const { return weights_; }
  std::size_t dimension() const { return weights_.size(); }

  /// Character of the monomial x^exponent, i.e. sum of exponent_i * weights[i].
  Character character_of(std::span<const std::int64_t> exponent) const;

 private:
  AbelianGroup group_;
  std::vector<Character> weights_;
};

/// dim Sym^q(V) for dim V = nu: the number of monomials of degree q in nu
/// variables, C(q + nu - 1, nu - 1).
BigInt sym_dim(std::size_t nu, std::uint64_t q);

/// Multiplicities of every character in Sym^q(V) for all q <= max_degree.
class MultiplicityTable {
 public:
  MultiplicityTable(AbelianGroup group, std::uint64_t max_degree);

  std::uint64_t max_degree() const { return max_degree_; }
  const AbelianGroup& group() const { return group_; }

  const BigInt& at(std::uint64_t q, const Character& chi) const;
  BigInt& at_index(std::uint64_t q, std::size_t element) {
    return counts_[q * static_cast<std::size_t>(group_.order()) + element];
  }
  const BigInt& at_index(std::uint64_t q, std::size_t element) const {
    return counts_[q * static_cast<std::size_t>(group_.order()) + element];
  }

 private:
  AbelianGroup group_;
  std::uint64_t max_degree_;
  std::vector<BigInt> counts_;
};

/// Dynamic programme over (weights processed, degree, group element). Adding
/// a variable of weight w multiplies the generating series by 1/(1 - t z^w),
/// i.e. T'[d][g] = T[d][g] + T'[d-1][g - w]. Cost O(nu * max_degree * |G|).
MultiplicityTable multiplicity_table(const DiagonalRepresentation& rep, std::uint64_t max_degree);

/// Number of monomials x in N^nu with |x| = q and sum x_i w_i = chi, which is
/// the multiplicity of the irreducible chi in Sym^q(V).
BigInt multiplicity(const DiagonalRepresentation& rep, const Character& chi, std::uint64_t q);

/// Same count, by a different route: expands the product over i of
/// sum_{d<=q} t^d z^{d w_i} in Z[G][t] / (t^{q+1}) with a full group-algebra
/// convolution and reads off the coefficient of t^q z^chi.
BigInt multiplicity_oracle(const DiagonalRepresentation& rep, const Character& chi, std::uint64_t q);

/// Order of the subgroup generated by `generators` (closure enumeration; the
/// empty list generates the trivial subgroup). Intended for test-scale groups.
std::int64_t subgroup_order(std::span<const Character> generators, const AbelianGroup& group);

/// A nonzero group element on which every weight is trivial, if one exists.
/// Elements are searched in mixed-radix order, so the result is the first
/// kernel element of the action. Enumerates the whole group.
std::optional<Character> trivially_acting_element(const DiagonalRepresentation& rep);

}  // namespace symsig
