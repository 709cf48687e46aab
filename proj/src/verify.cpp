#include "symsig/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "symsig/abelian_rep.hpp"
#include "symsig/cyclic_singularity.hpp"
#include "symsig/lattice_counting.hpp"
#include "symsig/signature.hpp"
#include "symsig/syzygy_rep.hpp"

namespace symsig {

namespace {

constexpr std::uint64_t kMaxDegree = 6;
constexpr std::uint64_t kEnumerationBound = 4;
constexpr std::uint64_t kSeriesBound = 20;

std::string label(const CyclicType& t) { return "1/" + std::to_string(t.n()) + "(1," + std::to_string(t.a()) + ")"; }

void record(VerifyCheck& check, bool ok, const std::string& what) {
  ++check.cases;
  if (ok) return;
  if (check.failures++ == 0) check.first_failure = what;
}

bool staircase_well_formed(const CyclicType& t, const Staircase& s) {
  if (s.size() < 3 || s.size() > static_cast<std::size_t>(t.n()) + 1) return false;
  if (s[0] != MonomialExponent{t.n(), 0} || s[1] != MonomialExponent{t.n() - t.a(), 1}) return false;
  if (s.generators.back() != MonomialExponent{0, t.n()}) return false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!is_invariant(t, s[k])) return false;
    if (k + 1 < s.size() && !(s[k].i > s[k + 1].i && s[k].j < s[k + 1].j)) return false;
  }
  // every invariant exponent in the box is divisible by some generator
  for (std::int64_t i = 0; i <= t.n(); ++i)
    for (std::int64_t j = 0; j <= t.n(); ++j) {
      const MonomialExponent m{i, j};
      if ((i == 0 && j == 0) || !is_invariant(t, m)) continue;
      if (std::none_of(s.generators.begin(), s.generators.end(), [&](const auto& p) { return divides(p, m); }))
        return false;
    }
  return true;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed(); });
}

VerifyReport verify_grid(std::int64_t max_order) {
  VerifyReport report;
  report.max_order = max_order;
  const auto named = [](const char* name) {
    VerifyCheck c;
    c.name = name;
    return c;
  };
  VerifyCheck staircase = named("staircase"), faithful = named("faithful_first_weight"),
              index = named("lattice_index"), signature = named("exact_signature"),
              oracle = named("multiplicity_oracle"), partition = named("partition_identity"),
              geometric = named("coset_enumeration"), series = named("series_partition");

  for (std::int64_t n = 2; n <= max_order; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const CyclicType t = validate(n, a);
      const std::string name = label(t);

      const Staircase stairs = minimal_generators(t);
      record(staircase, staircase_well_formed(t, stairs), name);

      const SyzygyRepresentation syz = syzygy_weights(t);
      record(faithful,
             is_faithful(syz) && syz.dimension() + 1 == stairs.size() && syz.weights.front() == a % n, name);

      const DiagonalRepresentation rep = to_diagonal(syz);
      const WeightLattice lat = kernel_lattice(rep);
      const auto closure = subgroup_order(rep.weights(), rep.group());
      record(index, lat.index == n && index_of_lattice(lat) == n && closure == n, name);

      const MultiplicityTable table = multiplicity_table(rep, std::max(kMaxDegree, kSeriesBound));
      std::vector<BigInt> numerators;
      for (std::int64_t chi = 0; chi < n; ++chi) {
        const Character c{{chi}};
        const std::string where = name + " chi=" + std::to_string(chi);
        record(signature, exact_signature(t, chi) == Rational(1, n), where);

        bool same = true;
        for (std::uint64_t q = 0; q <= kMaxDegree; ++q)
          same = same && table.at(q, c) == multiplicity_oracle(rep, c, q);
        record(oracle, same, where);

        const auto a0 = coset_representative(rep, c);
        record(geometric,
               a0 && count_coset_points(lat, *a0, kEnumerationBound) ==
                         count_coset_points_by_enumeration(lat, *a0, kEnumerationBound),
               where);

        const std::uint64_t grid[] = {kSeriesBound};
        numerators.push_back(ratio_series(t, chi, kSeriesBound, grid).entries.back().numerator);
      }

      bool sums = true;
      for (std::uint64_t q = 0; q <= kMaxDegree; ++q) {
        BigInt total = 0;
        for (std::int64_t chi = 0; chi < n; ++chi) total += table.at(q, Character{{chi}});
        sums = sums && total == sym_dim(rep.dimension(), q);
      }
      record(partition, sums, name);

      const BigInt total = std::accumulate(numerators.begin(), numerators.end(), BigInt(0));
      record(series, total == binomial(kSeriesBound + rep.dimension(), rep.dimension()), name);
    }
  }

  report.checks = {staircase, faithful, index, signature, oracle, partition, geometric, series};
  return report;
}

}  // namespace symsig
