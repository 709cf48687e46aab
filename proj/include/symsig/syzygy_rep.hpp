#pragma once

// The representation V with Syz^2_R(k) = (S (x) V)^G for a cyclic quotient
// singularity. Lifting the staircase generators p_1..p_mu of m_R to S, the
// kernel F of e_k -> p_k is free of rank mu - 1, minimally generated by the
// consecutive-pair relations
//
//     (m_{k,k+1} / p_k) e_k - (m_{k,k+1} / p_{k+1}) e_{k+1},
//     m_{k,k+1} = lcm(p_k, p_{k+1}).
//
// Each e_k carries the (trivial) weight of p_k, so the relation for the pair
// (p_k, p_{k+1}) spans a one-dimensional summand of V with character
// weight(lcm(p_k, p_{k+1})).
//
//   j ^
//     *--+             * staircase generators p_k
//        |             + lcm(p_k, p_{k+1})
//        *-----+
//              |
//              *--+
//                 |
//     +-----------*--> i

#include <cstdint>
#include <span>
#include <vector>

#include "symsig/abelian_rep.hpp"
#include "symsig/cyclic_singularity.hpp"

namespace symsig {

struct SyzygyRepresentation {
  CyclicType singularity;
  std::vector<std::int64_t> weights;  // residues mod n, one per consecutive staircase pair

  std::size_t dimension() const { return weights.size(); }
};

SyzygyRepresentation syzygy_weights(const CyclicType& t);

/// True iff gcd(weights, n) == 1, i.e. the weights generate Z/n.
bool is_faithful(const SyzygyRepresentation& rep);
bool is_faithful(std::int64_t n, std::span<const std::int64_t> weights);

/// The same representation as a diagonal representation of Z/n.
DiagonalRepresentation to_diagonal(const SyzygyRepresentation& rep);

}  // namespace symsig
