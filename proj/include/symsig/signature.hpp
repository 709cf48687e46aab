#pragma once

// Generalized symmetric signature of cyclic quotient singularities (and of
// faithful diagonal representations of finite abelian groups).
//
// For a faithful V and an irreducible chi the ratio
//
//     r_N = sum_{q<=N} mult(chi, Sym^q V) / sum_{q<=N} dim Sym^q V
//
// counts points of a coset of the kernel lattice L inside the dilated simplex
// N * Delta against all lattice points there, so it tends to 1 / [Z^nu : L].
// The limit is always reported exactly from the lattice index; the partial
// sums are there to observe the convergence.

#include <cstdint>
#include <span>
#include <vector>

#include "symsig/abelian_rep.hpp"
#include "symsig/cyclic_singularity.hpp"
#include "symsig/exact_arith.hpp"

namespace symsig {

struct RatioEntry {
  std::uint64_t degree_bound = 0;  // N
  BigInt numerator;                // sum_{q<=N} mult
  BigInt denominator;              // sum_{q<=N} dim
  Rational ratio;
};

struct RatioSeries {
  std::vector<RatioEntry> entries;  // strictly increasing N
  Rational target;
};

struct ScaledGap {
  std::uint64_t degree_bound = 0;
  Rational value;  // N * |r_N - target|
};

struct ConvergenceReport {
  Rational final_gap;
  std::vector<ScaledGap> scaled_gaps;
  bool monotone_tail = false;
};

struct GeneralSignature {
  Rational value;
  RatioSeries series;
};

/// 1 / [Z^nu : L] for the syzygy representation of t. chi in [0, n) picks the
/// indecomposable MCM module; the value does not depend on it. Throws
/// ValidationError for chi out of range and InvariantViolation if the
/// syzygy representation turns out not to be faithful or the index is not n.
Rational exact_signature(const CyclicType& t, std::int64_t chi);

/// Exact partial ratios at each grid point (sorted and deduplicated; every
/// point must be <= n_max). An empty grid means default_grid(n_max).
RatioSeries ratio_series(const CyclicType& t, std::int64_t chi, std::uint64_t n_max,
                         std::span<const std::uint64_t> grid);

/// Theorem-level version for any finite abelian group. Rejects non-faithful
/// representations with a diagnostic naming a trivially acting group element.
GeneralSignature general_signature(const DiagonalRepresentation& rep, const Character& chi, std::uint64_t n_max,
                                   std::span<const std::uint64_t> grid = {});

ConvergenceReport convergence_report(const RatioSeries& series);

/// 1, 2, 5, 10, 20, 50, ... up to n_max, with n_max itself always included.
std::vector<std::uint64_t> default_grid(std::uint64_t n_max);

}  // namespace symsig
