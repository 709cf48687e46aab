#include "symsig/abelian_rep.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "symsig/errors.hpp"

namespace symsig {

std::string to_string(const Character& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < c.components.size(); ++j) os << (j ? "," : "") << c.components[j];
  os << ')';
  return os.str();
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  strides_.reserve(moduli_.size());
  for (std::int64_t m : moduli_) {
    if (m < 1) throw ValidationError("group moduli must be positive (got " + std::to_string(m) + ")");
    if (order_ > kMaxOrder / m)
      throw ValidationError("group order exceeds the supported maximum " + std::to_string(kMaxOrder));
    strides_.push_back(order_);
    order_ *= m;
  }
}

Character AbelianGroup::normalize(const Character& c) const {
  if (!same_shape(c))
    throw ValidationError("character " + to_string(c) + " has " + std::to_string(c.components.size()) +
                          " components but the group has " + std::to_string(moduli_.size()) + " moduli");
  Character out = c;
  for (std::size_t j = 0; j < moduli_.size(); ++j) out.components[j] = mod_floor(out.components[j], moduli_[j]);
  return out;
}

Character AbelianGroup::add(const Character& x, const Character& y) const {
  Character out = zero();
  for (std::size_t j = 0; j < moduli_.size(); ++j)
    out.components[j] = mod_floor(x.components[j] + y.components[j], moduli_[j]);
  return out;
}

Character AbelianGroup::scale(const Character& x, std::int64_t k) const {
  Character out = zero();
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    const std::int64_t n = moduli_[j];
    out.components[j] = mod_floor(mod_floor(x.components[j], n) * mod_floor(k, n), n);
  }
  return out;
}

std::size_t AbelianGroup::index_of(const Character& c) const {
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) idx += c.components[j] * strides_[j];
  return static_cast<std::size_t>(idx);
}

std::vector<std::size_t> AbelianGroup::translation(const Character& w) const {
  const Character shift = normalize(w);
  const auto total = static_cast<std::size_t>(order());
  std::vector<std::size_t> out(total);
  std::vector<std::int64_t> digits(moduli_.size(), 0);
  for (std::size_t g = 0; g < total; ++g) {
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      std::int64_t d = digits[j] + shift.components[j];
      if (d >= moduli_[j]) d -= moduli_[j];
      idx += d * strides_[j];
    }
    out[g] = static_cast<std::size_t>(idx);
    for (std::size_t j = 0; j < moduli_.size() && ++digits[j] == moduli_[j]; ++j) digits[j] = 0;
  }
  return out;
}

Character AbelianGroup::element(std::size_t index) const {
  Character out = zero();
  auto rest = static_cast<std::int64_t>(index);
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    out.components[j] = rest % moduli_[j];
    rest /= moduli_[j];
  }
  return out;
}

DiagonalRepresentation::DiagonalRepresentation(AbelianGroup group, std::vector<Character> weights)
    : group_(std::move(group)) {
  if (weights.empty()) throw ValidationError("a representation needs at least one weight");
  weights_.reserve(weights.size());
  for (const auto& w : weights) weights_.push_back(group_.normalize(w));
}

Character DiagonalRepresentation::character_of(std::span<const std::int64_t> exponent) const {
  if (exponent.size() != weights_.size()) throw ValidationError("exponent length differs from dimension");
  Character out = group_.zero();
  for (std::size_t i = 0; i < weights_.size(); ++i) out = group_.add(out, group_.scale(weights_[i], exponent[i]));
  return out;
}

BigInt sym_dim(std::size_t nu, std::uint64_t q) {
  if (nu == 0) return q == 0 ? BigInt(1) : BigInt(0);
  return binomial(q + nu - 1, nu - 1);
}

MultiplicityTable::MultiplicityTable(AbelianGroup group, std::uint64_t max_degree)
    : group_(std::move(group)),
      max_degree_(max_degree),
      counts_((max_degree + 1) * static_cast<std::size_t>(group_.order()), BigInt(0)) {}

const BigInt& MultiplicityTable::at(std::uint64_t q, const Character& chi) const {
  if (q > max_degree_) throw ValidationError("degree beyond the tabulated range");
  return at_index(q, group_.index_of(group_.normalize(chi)));
}

MultiplicityTable multiplicity_table(const DiagonalRepresentation& rep, std::uint64_t max_degree) {
  const AbelianGroup& group = rep.group();
  const auto order = static_cast<std::size_t>(group.order());
  MultiplicityTable table(group, max_degree);
  table.at_index(0, group.index_of(group.zero())) = 1;

  for (const auto& w : rep.weights()) {
    const std::vector<std::size_t> minus_w = group.translation(group.scale(w, -1));
    for (std::uint64_t d = 1; d <= max_degree; ++d)
      for (std::size_t g = 0; g < order; ++g) table.at_index(d, g) += table.at_index(d - 1, minus_w[g]);
  }
  return table;
}

BigInt multiplicity(const DiagonalRepresentation& rep, const Character& chi, std::uint64_t q) {
  const Character target = rep.group().normalize(chi);
  return multiplicity_table(rep, q).at(q, target);
}

BigInt multiplicity_oracle(const DiagonalRepresentation& rep, const Character& chi, std::uint64_t q) {
  const AbelianGroup& group = rep.group();
  const Character target = group.normalize(chi);
  const auto order = static_cast<std::size_t>(group.order());
  const std::size_t degrees = q + 1;
  using Series = std::vector<BigInt>;  // [degree * order + element]

  Series product(degrees * order, BigInt(0));
  product[group.index_of(group.zero())] = 1;

  for (const auto& w : rep.weights()) {
    Series factor(degrees * order, BigInt(0));
    for (std::uint64_t d = 0; d <= q; ++d)
      factor[d * order + group.index_of(group.scale(w, static_cast<std::int64_t>(d)))] = 1;

    Series next(degrees * order, BigInt(0));
    for (std::uint64_t d1 = 0; d1 <= q; ++d1)
      for (std::size_t g = 0; g < order; ++g) {
        const BigInt& x = product[d1 * order + g];
        if (x == 0) continue;
        const Character ge = group.element(g);
        for (std::uint64_t d2 = 0; d1 + d2 <= q; ++d2)
          for (std::size_t h = 0; h < order; ++h) {
            const BigInt& y = factor[d2 * order + h];
            if (y == 0) continue;
            next[(d1 + d2) * order + group.index_of(group.add(ge, group.element(h)))] += x * y;
          }
      }
    product = std::move(next);
  }
  return product[q * order + group.index_of(target)];
}

std::int64_t subgroup_order(std::span<const Character> generators, const AbelianGroup& group) {
  std::vector<Character> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(group.normalize(g));

  std::vector<bool> seen(static_cast<std::size_t>(group.order()), false);
  std::deque<Character> frontier{group.zero()};
  seen[group.index_of(group.zero())] = true;
  std::int64_t count = 1;
  while (!frontier.empty()) {
    const Character x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Character y = group.add(x, g);
      const std::size_t idx = group.index_of(y);
      if (seen[idx]) continue;
      seen[idx] = true;
      ++count;
      frontier.push_back(std::move(y));
    }
  }
  return count;
}

std::optional<Character> trivially_acting_element(const DiagonalRepresentation& rep) {
  // weight w is trivial on g iff sum_j w_j g_j / n_j is an integer
  const AbelianGroup& group = rep.group();
  const auto& moduli = group.moduli();
  std::int64_t common = 1;
  for (std::int64_t m : moduli) common = std::lcm(common, m);

  for (std::size_t idx = 1; idx < static_cast<std::size_t>(group.order()); ++idx) {
    const Character g = group.element(idx);
    bool trivial = true;
    for (const auto& w : rep.weights()) {
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < moduli.size(); ++j)
        pairing = mod_floor(pairing + (w.components[j] * g.components[j]) % moduli[j] * (common / moduli[j]), common);
      if (pairing != 0) {
        trivial = false;
        break;
      }
    }
    if (trivial) return g;
  }
  return std::nullopt;
}

}  // namespace symsig
