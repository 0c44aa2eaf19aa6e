#include "lplab/ancillarity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "lplab/sufficiency.hpp"

namespace lplab {

namespace {

using Mask = std::uint32_t;

void require_ground_set(const FiniteModel& model, const Partition& partition) {
  if (partition.ground_size() != model.space_size()) {
    throw Error(ErrorCode::GroundSetMismatch, "partition is not over the model's sample space");
  }
}

RationalVector block_mass(const FiniteModel& model, const Partition::Block& block) {
  RationalVector mass(model.theta_size());
  for (std::size_t x : block) {
    for (std::size_t t = 0; t < model.theta_size(); ++t) mass[t] += model.prob(t, x);
  }
  return mass;
}

bool all_equal(const RationalVector& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// Marks every subset of the sample space whose probability is theta-free.
class FreeSubsetTable {
 public:
  FreeSubsetTable(const FiniteModel& model, std::size_t max_space) : n_(model.space_size()) {
    if (n_ > max_space || n_ > kAbsoluteMaxSpace) {
      throw Error(ErrorCode::SpaceTooLarge, "ancillary enumeration over " + std::to_string(n_) +
                                                " points exceeds the bound " +
                                                std::to_string(std::min(max_space, kAbsoluteMaxSpace)));
    }
    const std::size_t count = std::size_t{1} << n_;
    free_.assign(count, false);
    std::vector<RationalVector> mass(count, RationalVector(model.theta_size()));
    free_[0] = true;
    for (std::size_t s = 1; s < count; ++s) {
      const auto low = static_cast<std::size_t>(std::countr_zero(static_cast<Mask>(s)));
      const std::size_t rest = s & (s - 1);
      for (std::size_t t = 0; t < model.theta_size(); ++t) mass[s][t] = mass[rest][t] + model.prob(t, low);
      free_[s] = all_equal(mass[s]);
    }
  }

  std::size_t size() const { return n_; }
  bool is_free(Mask s) const { return free_[s]; }

  // True iff some proper nonempty subset of `block` has theta-free mass, so
  // the block can be split into two ancillary pieces.
  bool splittable(Mask block) const {
    for (Mask sub = (block - 1) & block; sub != 0; sub = (sub - 1) & block) {
      if (free_[sub]) return true;
    }
    return false;
  }

 private:
  std::size_t n_;
  std::vector<bool> free_;
};

Mask to_mask(const Partition::Block& block) {
  Mask m = 0;
  for (std::size_t x : block) m |= Mask{1} << x;
  return m;
}

void collect(const FreeSubsetTable& table, Mask remaining, std::vector<std::size_t>& labels, std::size_t next_label,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_labels(labels));
    return;
  }
  const Mask lowest = remaining & (~remaining + 1);
  const Mask others = remaining ^ lowest;
  // Iterate every subset of `others` (including the empty set and `others`).
  Mask sub = others;
  while (true) {
    const Mask block = sub | lowest;
    if (table.is_free(block)) {
      for (std::size_t x = 0; x < table.size(); ++x) {
        if (block & (Mask{1} << x)) labels[x] = next_label;
      }
      collect(table, remaining ^ block, labels, next_label + 1, out);
    }
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
}

std::vector<Partition> enumerate_with(const FreeSubsetTable& table) {
  std::vector<Partition> out;
  std::vector<std::size_t> labels(table.size(), 0);
  collect(table, static_cast<Mask>((std::size_t{1} << table.size()) - 1), labels, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> maximal_with(const FreeSubsetTable& table, const std::vector<Partition>& all) {
  std::vector<Partition> out;
  for (const auto& a : all) {
    const bool maximal = std::none_of(a.blocks().begin(), a.blocks().end(),
                                      [&](const auto& block) { return table.splittable(to_mask(block)); });
    if (maximal) out.push_back(a);
  }
  return out;
}

Partition laminal_from(const std::vector<Partition>& all, const std::vector<Partition>& maximal) {
  std::vector<Partition> candidates;
  for (const auto& a : all) {
    if (std::all_of(maximal.begin(), maximal.end(), [&](const Partition& m) { return is_function_of(a, m); })) {
      candidates.push_back(a);
    }
  }
  for (const auto& c : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(),
                    [&](const Partition& other) { return is_function_of(other, c); })) {
      return c;
    }
  }
  std::vector<Partition> antichain;
  for (const auto& c : candidates) {
    const bool refined = std::any_of(candidates.begin(), candidates.end(), [&](const Partition& other) {
      return other != c && is_function_of(c, other);
    });
    if (!refined) antichain.push_back(c);
  }
  throw NotUniqueError(std::move(antichain));
}

std::optional<CWitness> orient(std::optional<CWitness> w, Parent parent) {
  if (w) w->parent = parent;
  return w;
}

// Finds B containing the parent's observed point such that the conditional
// given B is isomorphic to the child. P(B) = w is forced by the observed
// columns; the remaining child columns scaled by w must occur among the
// parent's columns.
std::optional<CWitness> match_conditional(const ModelDataPair& parent, const ModelDataPair& child, bool durbin) {
  const FiniteModel& pm = parent.model();
  const FiniteModel& cm = child.model();
  if (cm.space_size() > pm.space_size()) return std::nullopt;
  const auto w = proportional(pm.column(parent.observed()), cm.column(child.observed()));
  if (!w) return std::nullopt;

  std::map<RationalVector, std::vector<std::size_t>> available;
  for (std::size_t x = pm.space_size(); x-- > 0;) {
    if (x != parent.observed()) available[pm.column(x)].push_back(x);
  }
  std::vector<std::size_t> child_of(pm.space_size(), static_cast<std::size_t>(-1));
  child_of[parent.observed()] = child.observed();
  for (std::size_t y = 0; y < cm.space_size(); ++y) {
    if (y == child.observed()) continue;
    RationalVector target = cm.column(y);
    for (auto& v : target) v *= *w;
    auto it = available.find(target);
    if (it == available.end() || it->second.empty()) return std::nullopt;
    child_of[it->second.back()] = y;
    it->second.pop_back();
  }

  std::vector<std::size_t> labels(pm.space_size(), 1);
  std::vector<std::size_t> block;
  for (std::size_t x = 0; x < pm.space_size(); ++x) {
    if (child_of[x] != static_cast<std::size_t>(-1)) {
      labels[x] = 0;
      block.push_back(x);
    }
  }
  Partition ancillary = Partition::from_labels(labels);

  if (durbin) {
    const Partition mss = likelihood_partition(pm);
    if (!is_function_of(ancillary, mss)) return std::nullopt;
  }

  SampleBijection phi(block.size());
  for (std::size_t i = 0; i < block.size(); ++i) phi[i] = child_of[block[i]];
  return CWitness{Parent::First, std::move(ancillary), std::move(phi)};
}

std::optional<CWitness> exhaustive_conditional(const ModelDataPair& parent, const ModelDataPair& child, bool durbin,
                                               std::size_t max_space) {
  const auto ancillaries = enumerate_ancillaries(parent.model(), max_space);
  std::optional<Partition> mss;
  if (durbin) mss = likelihood_partition(parent.model());
  for (const auto& a : ancillaries) {
    if (durbin && !is_function_of(a, *mss)) continue;
    if (a.block_containing(parent.observed()).size() != child.model().space_size()) continue;
    const ModelDataPair conditional = condition_on_block(parent, a);
    if (auto phi = pairs_isomorphic(conditional, child)) return CWitness{Parent::First, a, std::move(*phi)};
  }
  return std::nullopt;
}

}  // namespace

bool is_ancillary(const FiniteModel& model, const Partition& partition) {
  require_ground_set(model, partition);
  return std::all_of(partition.blocks().begin(), partition.blocks().end(),
                     [&](const auto& block) { return all_equal(block_mass(model, block)); });
}

RationalVector ancillary_block_masses(const FiniteModel& model, const Partition& partition) {
  if (!is_ancillary(model, partition)) throw Error(ErrorCode::NotAncillary, "partition is not ancillary");
  RationalVector masses;
  for (const auto& block : partition.blocks()) masses.push_back(block_mass(model, block).front());
  return masses;
}

std::vector<Partition> enumerate_ancillaries(const FiniteModel& model, std::size_t max_space) {
  return enumerate_with(FreeSubsetTable(model, max_space));
}

std::vector<Partition> maximal_ancillaries(const FiniteModel& model, std::size_t max_space) {
  const FreeSubsetTable table(model, max_space);
  return maximal_with(table, enumerate_with(table));
}

NotUniqueError::NotUniqueError(std::vector<Partition> antichain)
    : Error(ErrorCode::NotUnique, "no unique finest common coarsening of the maximal ancillaries (" +
                                      std::to_string(antichain.size()) + " incomparable candidates)"),
      antichain_(std::move(antichain)) {}

Partition laminal_ancillary(const FiniteModel& model, std::size_t max_space) {
  return ancillary_catalog(model, max_space).laminal;
}

AncillaryCatalog ancillary_catalog(const FiniteModel& model, std::size_t max_space) {
  const FreeSubsetTable table(model, max_space);
  std::vector<Partition> all = enumerate_with(table);
  std::vector<Partition> maximal = maximal_with(table, all);
  Partition laminal = laminal_from(all, maximal);
  return AncillaryCatalog{std::move(all), std::move(maximal), std::move(laminal)};
}

ModelDataPair condition_on_block(const ModelDataPair& pair, const Partition& ancillary) {
  const FiniteModel& m = pair.model();
  if (!is_ancillary(m, ancillary)) throw Error(ErrorCode::NotAncillary, "cannot condition on a non-ancillary partition");
  const auto& block = ancillary.block_containing(pair.observed());
  const Rational mass = block_mass(m, block).front();
  std::vector<RationalVector> rows(m.theta_size(), RationalVector(block.size()));
  std::vector<std::string> labels;
  std::size_t observed = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    labels.push_back(m.sample_labels()[block[i]]);
    if (block[i] == pair.observed()) observed = i;
    for (std::size_t t = 0; t < m.theta_size(); ++t) rows[t][i] = m.prob(t, block[i]) / mass;
  }
  return ModelDataPair(FiniteModel(m.theta_labels(), std::move(labels), std::move(rows)), observed);
}

std::optional<CWitness> c_related(const ModelDataPair& p1, const ModelDataPair& p2) {
  require_same_parameters(p1, p2);
  if (auto w = match_conditional(p1, p2, false)) return orient(std::move(w), Parent::First);
  return orient(match_conditional(p2, p1, false), Parent::Second);
}

std::optional<CWitness> durbin_c_related(const ModelDataPair& p1, const ModelDataPair& p2) {
  require_same_parameters(p1, p2);
  if (auto w = match_conditional(p1, p2, true)) return orient(std::move(w), Parent::First);
  return orient(match_conditional(p2, p1, true), Parent::Second);
}

std::optional<CWitness> c_related_exhaustive(const ModelDataPair& p1, const ModelDataPair& p2,
                                             std::size_t max_space) {
  require_same_parameters(p1, p2);
  if (auto w = exhaustive_conditional(p1, p2, false, max_space)) return orient(std::move(w), Parent::First);
  return orient(exhaustive_conditional(p2, p1, false, max_space), Parent::Second);
}

std::optional<CWitness> durbin_c_related_exhaustive(const ModelDataPair& p1, const ModelDataPair& p2,
                                                    std::size_t max_space) {
  require_same_parameters(p1, p2);
  if (auto w = exhaustive_conditional(p1, p2, true, max_space)) return orient(std::move(w), Parent::First);
  return orient(exhaustive_conditional(p2, p1, true, max_space), Parent::Second);
}

bool verify_c_witness(const ModelDataPair& p1, const ModelDataPair& p2, const CWitness& witness) {
  const ModelDataPair& parent = witness.parent == Parent::First ? p1 : p2;
  const ModelDataPair& child = witness.parent == Parent::First ? p2 : p1;
  if (p1.theta_labels() != p2.theta_labels()) return false;
  if (witness.ancillary.ground_size() != parent.model().space_size()) return false;
  if (!is_ancillary(parent.model(), witness.ancillary)) return false;
  const ModelDataPair conditional = condition_on_block(parent, witness.ancillary);
  const FiniteModel& cm = conditional.model();
  if (witness.bijection.size() != cm.space_size() || cm.space_size() != child.model().space_size()) return false;
  std::vector<bool> hit(cm.space_size(), false);
  for (std::size_t i = 0; i < cm.space_size(); ++i) {
    const std::size_t y = witness.bijection[i];
    if (y >= hit.size() || hit[y]) return false;
    hit[y] = true;
    if (cm.column(i) != child.model().column(y)) return false;
  }
  return witness.bijection[conditional.observed()] == child.observed();
}

}  // namespace lplab
