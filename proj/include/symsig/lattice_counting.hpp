#pragma once

// The weight map l : Z^nu -> G^, x -> sum x_i w_i, its kernel lattice L and
// the cosets a0 + L. The multiplicity of chi in Sym^q(V) is the number of
// points of (a0 + L) with nonnegative coordinates summing to q, where l(a0) = chi.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symsig/abelian_rep.hpp"
#include "symsig/exact_arith.hpp"

namespace symsig {

struct WeightLattice {
  DiagonalRepresentation rep;
  std::size_t ambient_dim = 0;
  IntegerMatrix basis;       // nu x nu, columns span L
  BigInt index;              // [Z^nu : L]
  SnfDecomposition basis_snf;  // of `basis`, used for membership tests
};

struct CosetPoint {
  std::vector<std::int64_t> a0;
};

/// l applied to an arbitrary integer vector.
Character weight_map(const DiagonalRepresentation& rep, std::span<const BigInt> x);

/// Kernel of x -> (W x mod n_j)_j, obtained from the Smith form of the
/// stacked relation matrix [W | diag(n_1, ..., n_k)]: the last nu columns of
/// its right transform span the integer kernel, and their first nu rows are a
/// basis of L. The index equals the order of the subgroup generated by the weights.
WeightLattice kernel_lattice(const DiagonalRepresentation& rep);

/// |det basis| from the Smith form; throws ValidationError if rank deficient.
BigInt index_of_lattice(const IntegerMatrix& basis);
BigInt index_of_lattice(const WeightLattice& lat);

/// Whether v lies in L: with U B V = D, v is in B Z^nu iff d_i | (U v)_i.
bool lattice_contains(const WeightLattice& lat, std::span<const BigInt> v);

/// Faithful iff the weights generate the whole character group, i.e. the
/// kernel lattice has index |G|.
bool is_faithful(const DiagonalRepresentation& rep);

/// The nonnegative a0 with l(a0) = chi of least total degree, ties broken by
/// the lexicographically smallest vector. Absent when chi is outside the
/// subgroup generated by the weights.
std::optional<CosetPoint> coset_representative(const DiagonalRepresentation& rep, const Character& chi);

/// #{x in N^nu : |x| <= bound, x = a0 mod L}, via the multiplicity table.
BigInt count_coset_points(const WeightLattice& lat, const CosetPoint& a0, std::uint64_t bound);

/// The same count by enumerating every point of the dilated simplex and
/// testing x - a0 against L. Exponential in nu; test scale only.
BigInt count_coset_points_by_enumeration(const WeightLattice& lat, const CosetPoint& a0, std::uint64_t bound);

}  // namespace symsig
