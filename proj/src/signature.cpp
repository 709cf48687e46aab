#include "symsig/signature.hpp"

#include <algorithm>
#include <string>

#include "symsig/errors.hpp"
#include "symsig/lattice_counting.hpp"
#include "symsig/syzygy_rep.hpp"

namespace symsig {

namespace {

std::vector<std::uint64_t> normalized_grid(std::span<const std::uint64_t> grid, std::uint64_t n_max) {
  std::vector<std::uint64_t> out(grid.begin(), grid.end());
  if (out.empty()) return default_grid(n_max);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.back() > n_max)
    throw ValidationError("grid point " + std::to_string(out.back()) + " exceeds n-max " + std::to_string(n_max));
  return out;
}

RatioSeries series_for(const DiagonalRepresentation& rep, const Character& chi, std::uint64_t n_max,
                       std::span<const std::uint64_t> grid, Rational target) {
  const std::vector<std::uint64_t> points = normalized_grid(grid, n_max);
  const std::uint64_t top = points.back();
  const MultiplicityTable table = multiplicity_table(rep, top);
  const std::size_t idx = rep.group().index_of(rep.group().normalize(chi));

  RatioSeries series;
  series.target = std::move(target);
  series.entries.reserve(points.size());
  BigInt numerator = 0;
  BigInt denominator = 0;
  auto next = points.begin();
  for (std::uint64_t q = 0; q <= top; ++q) {
    numerator += table.at_index(q, idx);
    denominator += sym_dim(rep.dimension(), q);
    if (q == *next) {
      Rational ratio(numerator, denominator);
      ratio.canonicalize();
      series.entries.push_back(RatioEntry{q, numerator, denominator, std::move(ratio)});
      ++next;
    }
  }
  return series;
}

void check_residue(std::int64_t chi, std::int64_t n) {
  if (chi < 0 || chi >= n)
    throw ValidationError("chi must lie in [0, " + std::to_string(n) + ") (got " + std::to_string(chi) + ")");
}

}  // namespace

Rational exact_signature(const CyclicType& t, std::int64_t chi) {
  check_residue(chi, t.n());
  const SyzygyRepresentation syz = syzygy_weights(t);
  if (!is_faithful(syz))
    throw InvariantViolation("syzygy representation of 1/" + std::to_string(t.n()) + "(1," + std::to_string(t.a()) +
                             ") is not faithful");
  const DiagonalRepresentation rep = to_diagonal(syz);
  const WeightLattice lat = kernel_lattice(rep);
  const BigInt index = index_of_lattice(lat);
  if (index != t.n())
    throw InvariantViolation("kernel lattice index " + index.get_str() + " differs from the group order " +
                             std::to_string(t.n()));
  if (!coset_representative(rep, Character{{chi}}))
    throw InvariantViolation("character " + std::to_string(chi) + " has no coset in a faithful representation");
  Rational value(BigInt(1), index);
  value.canonicalize();
  return value;
}

RatioSeries ratio_series(const CyclicType& t, std::int64_t chi, std::uint64_t n_max,
                         std::span<const std::uint64_t> grid) {
  Rational target = exact_signature(t, chi);
  return series_for(to_diagonal(syzygy_weights(t)), Character{{chi}}, n_max, grid, std::move(target));
}

GeneralSignature general_signature(const DiagonalRepresentation& rep, const Character& chi, std::uint64_t n_max,
                                   std::span<const std::uint64_t> grid) {
  const Character target_chi = rep.group().normalize(chi);
  const WeightLattice lat = kernel_lattice(rep);
  if (lat.index != rep.group().order()) {
    const auto kernel = trivially_acting_element(rep);
    throw ValidationError("representation is not faithful: group element " +
                          (kernel ? to_string(*kernel) : std::string("?")) + " acts trivially");
  }
  Rational value(BigInt(1), index_of_lattice(lat));
  value.canonicalize();
  RatioSeries series = series_for(rep, target_chi, n_max, grid, value);
  return GeneralSignature{std::move(value), std::move(series)};
}

ConvergenceReport convergence_report(const RatioSeries& series) {
  if (series.entries.empty()) throw ValidationError("convergence report of an empty series");
  ConvergenceReport report;
  std::vector<Rational> gaps;
  gaps.reserve(series.entries.size());
  for (const auto& e : series.entries) {
    Rational gap = abs(e.ratio - series.target);
    report.scaled_gaps.push_back(ScaledGap{e.degree_bound, Rational(gap * e.degree_bound)});
    gaps.push_back(std::move(gap));
  }
  report.final_gap = gaps.back();
  report.monotone_tail = true;
  for (std::size_t i = gaps.size() / 2; i + 1 < gaps.size(); ++i)
    if (gaps[i + 1] > gaps[i]) report.monotone_tail = false;
  return report;
}

std::vector<std::uint64_t> default_grid(std::uint64_t n_max) {
  std::vector<std::uint64_t> out;
  static constexpr std::uint64_t kSteps[] = {1, 2, 5};
  for (std::uint64_t scale = 1; scale <= n_max; scale *= 10) {
    for (std::uint64_t s : kSteps) {
      if (s * scale < n_max) out.push_back(s * scale);
    }
    if (scale > n_max / 10) break;
  }
  out.push_back(n_max);
  return out;
}

}  // namespace symsig
