#pragma once

// Fixtures, seeded generators and brute-force oracles shared by the unit tests
// and the acceptance binary. Nothing here calls into the library's own
// decision procedures; the oracles only use FiniteModel accessors and Rational.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lplab/ancillarity.hpp"
#include "lplab/evidence.hpp"
#include "lplab/model.hpp"
#include "lplab/partition.hpp"
#include "lplab/relations.hpp"
#include "lplab/search.hpp"

namespace lplab::test {

inline RationalVector q(std::initializer_list<const char*> xs) {
  RationalVector out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

inline FiniteModel fix_a() {
  return FiniteModel({"t1", "t2"}, {"x1", "x2", "x3"}, {q({"1/6", "1/3", "1/2"}), q({"1/12", "1/6", "3/4"})});
}
inline FiniteModel fix_b() {
  return FiniteModel({"t1", "t2"}, {"y1", "y2"}, {q({"1/2", "1/2"}), q({"1/4", "3/4"})});
}
inline FiniteModel fix_c() {
  return FiniteModel({"t1", "t2"}, {"z1", "z2"}, {q({"1/3", "2/3"}), q({"1/2", "1/2"})});
}
inline FiniteModel fix_d() {
  return FiniteModel({"t1", "t2"}, {"1", "2", "3", "4"},
                     {q({"1/6", "2/6", "1/6", "2/6"}), q({"2/6", "1/6", "2/6", "1/6"})});
}
inline Prior fix_e() { return Prior({"t1", "t2"}, q({"1/2", "1/2"})); }

// C is not transitive: first -C- middle -C- last, first and last unrelated.
// Found by the bounded search over |X| <= 6, denominators <= 6 and frozen here.
struct FrozenTriple {
  ModelDataPair first, middle, last;
};
inline FrozenTriple frozen_c_triple() {
  return {ModelDataPair(FiniteModel({"t1", "t2"}, {"x1", "x2"}, {q({"1/2", "1/2"}), q({"1/2", "1/2"})}), 0),
          ModelDataPair(FiniteModel({"t1", "t2"}, {"x1", "x2", "x3"},
                                    {q({"1/4", "1/4", "1/2"}), q({"1/4", "1/4", "1/2"})}),
                        0),
          ModelDataPair(FiniteModel({"t1", "t2"}, {"x1", "x3"}, {q({"1/3", "2/3"}), q({"1/3", "2/3"})}), 0)};
}

// A parameter-dependent triple on |X| = 4 with the same shape.
inline FrozenTriple nondegenerate_c_triple() {
  const FiniteModel middle({"t1", "t2"}, {"x1", "x2", "x3", "x4"},
                           {q({"1/6", "1/3", "1/2", "0"}), q({"1/3", "1/6", "1/3", "1/6"})});
  // Conditioning x1 on {x1 x2 | x3 x4} and on {x1 x3 | x2 x4} gives two different two-point models.
  const FiniteModel first({"t1", "t2"}, {"a", "b"}, {q({"1/3", "2/3"}), q({"2/3", "1/3"})});
  const FiniteModel last({"t1", "t2"}, {"c", "d"}, {q({"1/4", "3/4"}), q({"1/2", "1/2"})});
  return {ModelDataPair(first, 0), ModelDataPair(middle, 0), ModelDataPair(last, 0)};
}

// ---------------------------------------------------------------- oracles

// All set partitions of {0..n-1} as block lists, by recursive insertion.
inline std::vector<std::vector<std::vector<std::size_t>>> all_set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::vector<std::size_t>> current;
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (x == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(x);
      rec(x + 1);
      current[b].pop_back();
    }
    current.push_back({x});
    rec(x + 1);
    current.pop_back();
  };
  rec(0);
  return out;
}

inline Rational block_sum(const FiniteModel& m, std::size_t theta, const std::vector<std::size_t>& block) {
  Rational s;
  for (std::size_t x : block) s += m.prob(theta, x);
  return s;
}

inline bool oracle_is_ancillary(const FiniteModel& m, const std::vector<std::vector<std::size_t>>& blocks) {
  for (const auto& b : blocks) {
    for (std::size_t t = 1; t < m.theta_size(); ++t) {
      if (block_sum(m, t, b) != block_sum(m, 0, b)) return false;
    }
  }
  return true;
}

// Canonical key of a block list: blocks sorted internally and by first element.
inline std::vector<std::vector<std::size_t>> normalize_blocks(std::vector<std::vector<std::size_t>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline std::set<std::vector<std::vector<std::size_t>>> oracle_ancillaries(const FiniteModel& m) {
  std::set<std::vector<std::vector<std::size_t>>> out;
  for (auto& p : all_set_partitions(m.space_size())) {
    if (oracle_is_ancillary(m, p)) out.insert(normalize_blocks(p));
  }
  return out;
}

// fine refines coarse: every fine block sits inside one coarse block.
inline bool oracle_refines(const std::vector<std::vector<std::size_t>>& fine,
                           const std::vector<std::vector<std::size_t>>& coarse) {
  for (const auto& fb : fine) {
    bool inside = false;
    for (const auto& cb : coarse) {
      if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) inside = true;
    }
    if (!inside) return false;
  }
  return true;
}

inline std::set<std::vector<std::vector<std::size_t>>> oracle_maximal(const FiniteModel& m) {
  const auto all = oracle_ancillaries(m);
  std::set<std::vector<std::vector<std::size_t>>> out;
  for (const auto& a : all) {
    bool dominated = false;
    for (const auto& b : all) {
      if (a != b && oracle_refines(b, a)) dominated = true;
    }
    if (!dominated) out.insert(a);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> blocks_of(const Partition& p) { return normalize_blocks(p.blocks()); }

inline bool cross_proportional(const RationalVector& a, const RationalVector& b) {
  // a and b are positive multiples of each other (cross products agree, same support).
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

inline RationalVector column_of(const FiniteModel& m, std::size_t x) {
  RationalVector c;
  for (std::size_t t = 0; t < m.theta_size(); ++t) c.push_back(m.prob(t, x));
  return c;
}

inline RationalVector oracle_likelihood(const ModelDataPair& p) { return column_of(p.model(), p.observed()); }

// Minimal sufficient reduction computed from scratch: group proportional columns,
// sum within groups. Returns the reduced columns and the observed group index.
struct OracleReduction {
  std::vector<RationalVector> columns;
  std::size_t observed;
};
inline OracleReduction oracle_reduce(const ModelDataPair& p) {
  const FiniteModel& m = p.model();
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(m.space_size());
  for (std::size_t x = 0; x < m.space_size(); ++x) {
    bool placed = false;
    for (std::size_t g = 0; g < groups.size() && !placed; ++g) {
      if (cross_proportional(column_of(m, groups[g].front()), column_of(m, x))) {
        groups[g].push_back(x);
        group_of[x] = g;
        placed = true;
      }
    }
    if (!placed) {
      group_of[x] = groups.size();
      groups.push_back({x});
    }
  }
  OracleReduction r{{}, group_of[p.observed()]};
  for (const auto& g : groups) {
    RationalVector c(m.theta_size());
    for (std::size_t t = 0; t < m.theta_size(); ++t) c[t] = block_sum(m, t, g);
    r.columns.push_back(c);
  }
  return r;
}

// Isomorphism of (columns, observed) by brute force over permutations.
inline bool oracle_isomorphic(const std::vector<RationalVector>& c1, std::size_t o1,
                              const std::vector<RationalVector>& c2, std::size_t o2) {
  if (c1.size() != c2.size() || c1[o1] != c2[o2]) return false;
  std::vector<std::size_t> perm(c2.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[o1] != o2) continue;
    bool ok = true;
    for (std::size_t i = 0; i < c1.size() && ok; ++i) ok = c1[i] == c2[perm[i]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<RationalVector> columns(const FiniteModel& m) {
  std::vector<RationalVector> out;
  for (std::size_t x = 0; x < m.space_size(); ++x) out.push_back(column_of(m, x));
  return out;
}

inline bool oracle_s(const ModelDataPair& a, const ModelDataPair& b) {
  const OracleReduction ra = oracle_reduce(a);
  const OracleReduction rb = oracle_reduce(b);
  return oracle_isomorphic(ra.columns, ra.observed, rb.columns, rb.observed);
}

inline bool oracle_l(const ModelDataPair& a, const ModelDataPair& b) {
  return cross_proportional(oracle_likelihood(a), oracle_likelihood(b));
}

// parent conditioned on some ancillary block is isomorphic to child.
inline bool oracle_c_directed(const ModelDataPair& parent, const ModelDataPair& child) {
  const FiniteModel& m = parent.model();
  for (const auto& blocks : all_set_partitions(m.space_size())) {
    if (!oracle_is_ancillary(m, blocks)) continue;
    for (const auto& b : blocks) {
      if (std::find(b.begin(), b.end(), parent.observed()) == b.end()) continue;
      if (b.size() != child.model().space_size()) continue;
      const Rational mass = block_sum(m, 0, b);
      std::vector<RationalVector> cond;
      std::size_t obs = 0;
      for (std::size_t i = 0; i < b.size(); ++i) {
        RationalVector c = column_of(m, b[i]);
        for (auto& v : c) v = v / mass;
        cond.push_back(c);
        if (b[i] == parent.observed()) obs = i;
      }
      if (oracle_isomorphic(cond, obs, columns(child.model()), child.observed())) return true;
    }
  }
  return false;
}

inline bool oracle_c(const ModelDataPair& a, const ModelDataPair& b) {
  return oracle_c_directed(a, b) || oracle_c_directed(b, a);
}

// Replays a C witness from first principles.
inline bool oracle_check_c_witness(const ModelDataPair& a, const ModelDataPair& b, const CWitness& w) {
  const ModelDataPair& parent = w.parent == Parent::First ? a : b;
  const ModelDataPair& child = w.parent == Parent::First ? b : a;
  const FiniteModel& m = parent.model();
  if (!oracle_is_ancillary(m, w.ancillary.blocks())) return false;
  std::vector<std::size_t> block;
  for (std::size_t x = 0; x < m.space_size(); ++x) {
    if (w.ancillary.labels()[x] == w.ancillary.labels()[parent.observed()]) block.push_back(x);
  }
  if (block.size() != child.model().space_size() || w.bijection.size() != block.size()) return false;
  const Rational mass = block_sum(m, 0, block);
  std::set<std::size_t> image;
  for (std::size_t i = 0; i < block.size(); ++i) {
    const std::size_t y = w.bijection[i];
    if (y >= child.model().space_size() || !image.insert(y).second) return false;
    for (std::size_t t = 0; t < m.theta_size(); ++t) {
      if (m.prob(t, block[i]) / mass != child.model().prob(t, y)) return false;
    }
    if (block[i] == parent.observed() && y != child.observed()) return false;
  }
  return true;
}

// Replays any chain step against the oracles above.
inline bool oracle_check_step(const ModelDataPair& x, const ModelDataPair& y, const ChainStep& step) {
  const ModelDataPair& a = step.orientation == Orientation::Forward ? x : y;
  const ModelDataPair& b = step.orientation == Orientation::Forward ? y : x;
  if (const auto* cw = std::get_if<CWitness>(&step.witness)) return oracle_check_c_witness(a, b, *cw);
  if (std::holds_alternative<SWitness>(step.witness)) return oracle_s(a, b);
  return oracle_l(a, b);
}

// ---------------------------------------------------------------- generators

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Splits `mass` into `parts` nonnegative rationals from integer weights in [0, max_weight];
// when `positive` every part is nonzero.
inline RationalVector split_mass(Rng& rng, const Rational& mass, std::size_t parts, bool positive,
                                 std::size_t max_weight = 5) {
  std::vector<std::int64_t> w(parts);
  std::int64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& v : w) {
      v = static_cast<std::int64_t>(uniform(rng, positive ? 1 : 0, max_weight));
      total += v;
    }
  }
  RationalVector out;
  for (auto v : w) out.push_back(mass * Rational(v, total));
  return out;
}

inline FiniteModel random_model(Rng& rng, std::size_t k, std::size_t n, std::size_t max_weight = 6) {
  std::vector<RationalVector> rows;
  for (std::size_t t = 0; t < k; ++t) rows.push_back(split_mass(rng, Rational(1), n, false, max_weight));
  for (std::size_t x = 0; x < n; ++x) {
    bool reachable = false;
    for (const auto& r : rows) reachable = reachable || !r[x].is_zero();
    if (!reachable) {
      // Move a little mass from the largest entry of row 0.
      auto it = std::max_element(rows[0].begin(), rows[0].end());
      const Rational moved = *it / Rational(2);
      *it -= moved;
      rows[0][x] = moved;
    }
  }
  return FiniteModel(default_theta_labels(k), default_sample_labels(n), std::move(rows));
}

inline ModelDataPair random_pair(Rng& rng, std::size_t k, std::size_t n) {
  FiniteModel m = random_model(rng, k, n);
  return ModelDataPair(std::move(m), uniform(rng, 0, n - 1));
}

inline Prior random_positive_prior(Rng& rng, std::size_t k) {
  return Prior(default_theta_labels(k), split_mass(rng, Rational(1), k, true));
}

inline std::vector<std::string> prefixed_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

// Shuffles sample points (and relabels) so that observed positions vary.
inline ModelDataPair shuffled(Rng& rng, const ModelDataPair& p, const std::string& prefix) {
  const FiniteModel& m = p.model();
  std::vector<std::size_t> perm(m.space_size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<RationalVector> rows(m.theta_size(), RationalVector(m.space_size()));
  std::size_t observed = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t t = 0; t < m.theta_size(); ++t) rows[t][i] = m.prob(t, perm[i]);
    if (perm[i] == p.observed()) observed = i;
  }
  return ModelDataPair(FiniteModel(m.theta_labels(), prefixed_labels(prefix, m.space_size()), std::move(rows)),
                       observed);
}

// Scaling trick: the second model puts c times the likelihood on one point and
// spreads the remaining mass of each row over fresh points.
inline ModelDataPair scaled_partner(Rng& rng, const ModelDataPair& p) {
  const RationalVector lik = oracle_likelihood(p);
  const Rational top = *std::max_element(lik.begin(), lik.end());
  static const char* kFactors[] = {"1/3", "1/2", "2/3", "3/4", "1", "4/3", "3/2", "2", "3"};
  Rational c = Rational::parse(kFactors[uniform(rng, 0, std::size(kFactors) - 1)]);
  if (c * top > Rational(1)) c = Rational(1) / top;
  const std::size_t extra = uniform(rng, 1, 3);
  const std::size_t k = lik.size();
  std::vector<RationalVector> rows(k);
  bool any_rest = false;
  for (std::size_t t = 0; t < k; ++t) {
    const Rational rest = Rational(1) - c * lik[t];
    rows[t].push_back(c * lik[t]);
    if (rest.is_zero()) {
      rows[t].resize(1 + extra);
    } else {
      any_rest = true;
      for (auto& v : split_mass(rng, rest, extra, true)) rows[t].push_back(v);
    }
  }
  if (!any_rest) {
    for (auto& r : rows) r.resize(1);
  }
  const std::size_t n = rows.front().size();
  return shuffled(rng, ModelDataPair(FiniteModel(p.theta_labels(), default_sample_labels(n), std::move(rows)), 0),
                  "u");
}

// Embedding trick: the pair sits inside a lambda-weighted mixture with another model.
inline ModelDataPair embedded_partner(Rng& rng, const ModelDataPair& p) {
  const FiniteModel& m = p.model();
  const FiniteModel other = random_model(rng, m.theta_size(), uniform(rng, 1, 3));
  const Rational lambda(static_cast<std::int64_t>(uniform(rng, 1, 4)), 5);
  std::vector<RationalVector> rows(m.theta_size());
  for (std::size_t t = 0; t < m.theta_size(); ++t) {
    for (const auto& v : m.row(t)) rows[t].push_back(lambda * v);
    for (const auto& v : other.row(t)) rows[t].push_back((Rational(1) - lambda) * v);
  }
  const std::size_t n = rows.front().size();
  return shuffled(
      rng, ModelDataPair(FiniteModel(m.theta_labels(), default_sample_labels(n), std::move(rows)), p.observed()),
      "v");
}

// Refinement trick: unobserved points are split in two with parameter-dependent shares.
inline ModelDataPair split_partner(Rng& rng, const ModelDataPair& p) {
  const FiniteModel& m = p.model();
  std::vector<RationalVector> rows(m.theta_size());
  std::size_t observed = 0;
  for (std::size_t x = 0; x < m.space_size(); ++x) {
    const bool split = x != p.observed() && uniform(rng, 0, 1) == 1;
    if (x == p.observed()) observed = rows.front().size();
    if (!split) {
      for (std::size_t t = 0; t < m.theta_size(); ++t) rows[t].push_back(m.prob(t, x));
      continue;
    }
    std::vector<RationalVector> parts;
    for (std::size_t t = 0; t < m.theta_size(); ++t) parts.push_back(split_mass(rng, m.prob(t, x), 2, true));
    for (std::size_t t = 0; t < m.theta_size(); ++t) {
      rows[t].push_back(parts[t][0]);
      rows[t].push_back(parts[t][1]);
    }
  }
  // A split of an all-zero-in-some-row point can leave a column unreachable only
  // if the original column was; the original is valid, so both halves are reachable.
  const std::size_t n = rows.front().size();
  return shuffled(rng, ModelDataPair(FiniteModel(m.theta_labels(), default_sample_labels(n), std::move(rows)), observed),
                  "w");
}

struct LPair {
  ModelDataPair first;
  ModelDataPair second;
  std::string origin;
};

// Seeded stream of L-related pairs, cycling scaling, embedding, refinement and grid draws.
inline std::vector<LPair> l_related_pairs(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<ModelDataPair> grid = enumerate_pairs(ModelGrid{2, 1, 3, 4});
  std::map<RationalVector, std::vector<std::size_t>> by_direction;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    RationalVector lik = oracle_likelihood(grid[i]);
    const Rational s = sum(lik);
    for (auto& v : lik) v = v / s;
    by_direction[lik].push_back(i);
  }
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [dir, members] : by_direction) {
    if (members.size() >= 2) groups.push_back(members);
  }

  std::vector<LPair> out;
  while (out.size() < count) {
    const std::size_t kind = out.size() % 4;
    if (kind == 3) {
      const auto& g = groups[uniform(rng, 0, groups.size() - 1)];
      std::size_t i = uniform(rng, 0, g.size() - 1);
      std::size_t j = uniform(rng, 0, g.size() - 2);
      if (j >= i) ++j;
      out.push_back({shuffled(rng, grid[g[i]], "g"), shuffled(rng, grid[g[j]], "h"), "grid"});
      continue;
    }
    const std::size_t k = uniform(rng, 2, 3);
    const ModelDataPair base = random_pair(rng, k, uniform(rng, 1, 4));
    if (kind == 0) out.push_back({base, scaled_partner(rng, base), "scaling"});
    if (kind == 1) out.push_back({base, embedded_partner(rng, base), "embedding"});
    if (kind == 2) out.push_back({base, split_partner(rng, base), "refinement"});
  }
  return out;
}

}  // namespace lplab::test
