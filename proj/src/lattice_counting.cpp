#include "symsig/lattice_counting.hpp"

#include <deque>

#include "symsig/errors.hpp"

namespace symsig {

Character weight_map(const DiagonalRepresentation& rep, std::span<const BigInt> x) {
  const AbelianGroup& group = rep.group();
  if (x.size() != rep.dimension()) throw ValidationError("vector length differs from the representation dimension");
  Character out = group.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    Character term = group.zero();
    for (std::size_t j = 0; j < group.rank(); ++j) {
      const auto n = static_cast<unsigned long>(group.moduli()[j]);
      term.components[j] = static_cast<std::int64_t>(mpz_fdiv_ui(x[i].get_mpz_t(), n));
    }
    // term holds x_i mod n_j; multiply componentwise by the weight
    for (std::size_t j = 0; j < group.rank(); ++j)
      term.components[j] = mod_floor(term.components[j] * rep.weights()[i].components[j], group.moduli()[j]);
    out = group.add(out, term);
  }
  return out;
}

BigInt index_of_lattice(const IntegerMatrix& basis) {
  if (!basis.is_square()) throw ValidationError("lattice basis must be square");
  return abs_det_of_full_rank_kernel(snf(basis));
}

BigInt index_of_lattice(const WeightLattice& lat) { return abs_det_of_full_rank_kernel(lat.basis_snf); }

WeightLattice kernel_lattice(const DiagonalRepresentation& rep) {
  const AbelianGroup& group = rep.group();
  const std::size_t nu = rep.dimension();
  const std::size_t k = group.rank();

  IntegerMatrix basis;
  if (k == 0) {
    basis = IntegerMatrix::identity(nu);
  } else {
    IntegerMatrix relation(k, nu + k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < nu; ++i) relation(j, i) = rep.weights()[i].components[j];
      relation(j, nu + j) = group.moduli()[j];
    }
    const SnfDecomposition rel = snf(relation);
    if (rel.rank != k) throw InvariantViolation("relation matrix [W | diag(n)] must have full row rank");
    basis = IntegerMatrix(nu, nu);
    for (std::size_t c = 0; c < nu; ++c)
      for (std::size_t r = 0; r < nu; ++r) basis(r, c) = rel.V(r, k + c);
  }

  SnfDecomposition bsnf = snf(basis);
  BigInt index = abs_det_of_full_rank_kernel(bsnf);
  return WeightLattice{rep, nu, std::move(basis), std::move(index), std::move(bsnf)};
}

bool lattice_contains(const WeightLattice& lat, std::span<const BigInt> v) {
  if (v.size() != lat.ambient_dim) throw ValidationError("vector length differs from the lattice dimension");
  const IntegerMatrix& u = lat.basis_snf.U;
  const IntegerMatrix& d = lat.basis_snf.D;
  BigInt uv;
  for (std::size_t r = 0; r < lat.ambient_dim; ++r) {
    uv = 0;
    for (std::size_t c = 0; c < lat.ambient_dim; ++c) uv += u(r, c) * v[c];
    if (!mpz_divisible_p(uv.get_mpz_t(), d(r, r).get_mpz_t())) return false;
  }
  return true;
}

bool is_faithful(const DiagonalRepresentation& rep) { return kernel_lattice(rep).index == rep.group().order(); }

std::optional<CosetPoint> coset_representative(const DiagonalRepresentation& rep, const Character& chi) {
  const AbelianGroup& group = rep.group();
  const Character target = group.normalize(chi);
  const std::size_t nu = rep.dimension();
  const auto order = static_cast<std::size_t>(group.order());

  std::vector<std::vector<std::size_t>> plus_w, minus_w;
  for (const auto& w : rep.weights()) {
    plus_w.push_back(group.translation(w));
    minus_w.push_back(group.translation(group.scale(w, -1)));
  }

  // least degree: breadth-first distance in the Cayley graph of the weights
  std::vector<std::int64_t> dist(order, -1);
  const std::size_t origin = group.index_of(group.zero());
  dist[origin] = 0;
  std::deque<std::size_t> frontier{origin};
  while (!frontier.empty()) {
    const std::size_t g = frontier.front();
    frontier.pop_front();
    for (const auto& shift : plus_w) {
      const std::size_t h = shift[g];
      if (dist[h] >= 0) continue;
      dist[h] = dist[g] + 1;
      frontier.push_back(h);
    }
  }
  const std::int64_t degree_signed = dist[group.index_of(target)];
  if (degree_signed < 0) return std::nullopt;
  const auto degree = static_cast<std::size_t>(degree_signed);

  // feasible[i][d][g]: some x_i..x_{nu-1} >= 0 has degree d and character g
  const std::size_t layer = (degree + 1) * order;
  std::vector<std::vector<bool>> feasible(nu + 1, std::vector<bool>(layer, false));
  feasible[nu][origin] = true;
  for (std::size_t i = nu; i-- > 0;) {
    for (std::size_t d = 0; d <= degree; ++d)
      for (std::size_t g = 0; g < order; ++g)
        feasible[i][d * order + g] =
            feasible[i + 1][d * order + g] || (d > 0 && feasible[i][(d - 1) * order + minus_w[i][g]]);
  }

  CosetPoint out{std::vector<std::int64_t>(nu, 0)};
  std::size_t remaining = degree;
  std::size_t want = group.index_of(target);
  for (std::size_t i = 0; i < nu; ++i) {
    std::size_t rest = want;
    for (std::size_t x = 0; x <= remaining; ++x, rest = minus_w[i][rest]) {
      if (feasible[i + 1][(remaining - x) * order + rest]) {
        out.a0[i] = static_cast<std::int64_t>(x);
        remaining -= x;
        want = rest;
        break;
      }
    }
  }
  if (remaining != 0 || want != origin) throw InvariantViolation("coset representative reconstruction failed");
  return out;
}

BigInt count_coset_points(const WeightLattice& lat, const CosetPoint& a0, std::uint64_t bound) {
  const Character chi = lat.rep.character_of(a0.a0);
  const MultiplicityTable table = multiplicity_table(lat.rep, bound);
  const std::size_t idx = lat.rep.group().index_of(chi);
  BigInt total = 0;
  for (std::uint64_t q = 0; q <= bound; ++q) total += table.at_index(q, idx);
  return total;
}

namespace {

void enumerate_simplex(const WeightLattice& lat, const CosetPoint& a0, std::vector<BigInt>& shifted,
                       std::size_t coord, std::uint64_t budget, BigInt& count) {
  if (coord == lat.ambient_dim) {
    if (lattice_contains(lat, shifted)) ++count;
    return;
  }
  for (std::uint64_t x = 0; x <= budget; ++x) {
    shifted[coord] = static_cast<long>(x) - a0.a0[coord];
    enumerate_simplex(lat, a0, shifted, coord + 1, budget - x, count);
  }
}

}  // namespace

BigInt count_coset_points_by_enumeration(const WeightLattice& lat, const CosetPoint& a0, std::uint64_t bound) {
  if (a0.a0.size() != lat.ambient_dim) throw ValidationError("coset point length differs from the lattice dimension");
  std::vector<BigInt> shifted(lat.ambient_dim);
  BigInt count = 0;
  enumerate_simplex(lat, a0, shifted, 0, bound, count);
  return count;
}

}  // namespace symsig
