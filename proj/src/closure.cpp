#include "lplab/closure.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>

#include "lplab/error.hpp"

namespace lplab {

Universe::Universe(const std::vector<ModelDataPair>& pairs) {
  for (const auto& p : pairs) insert(p);
}

namespace {

// Canonical forms carry default labels, so probabilities and the observed
// position identify them.
std::string canonical_key(const ModelDataPair& canonical) {
  std::string key = std::to_string(canonical.observed());
  for (const auto& row : canonical.model().probs()) {
    key += ';';
    for (const auto& v : row) key += v.str() + ',';
  }
  return key;
}

}  // namespace

std::optional<std::size_t> Universe::find(const ModelDataPair& pair) const {
  if (!members_.empty() && members_.front().theta_labels() != pair.theta_labels()) return std::nullopt;
  const auto it = index_.find(canonical_key(canonical_form(pair)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::insert(const ModelDataPair& pair) {
  if (!members_.empty()) require_same_parameters(members_.front(), pair);
  ModelDataPair canonical = canonical_form(pair);
  auto [it, inserted] = index_.try_emplace(canonical_key(canonical), members_.size());
  if (inserted) members_.push_back(std::move(canonical));
  return it->second;
}

RelationOracle::RelationOracle(const Universe& universe, RelationKind kind) : universe_(&universe), kind_(kind) {
  if (kind == RelationKind::S || kind == RelationKind::SOrC) {
    reductions_.reserve(universe.size());
    for (const auto& m : universe.members()) reductions_.push_back(reduce_to_mss(m));
  }
}

std::optional<StepWitness> RelationOracle::witness(std::size_t i, std::size_t j) const {
  const ModelDataPair& a = (*universe_)[i];
  const ModelDataPair& b = (*universe_)[j];
  auto s_step = [&]() -> std::optional<StepWitness> {
    if (auto phi = pairs_isomorphic(reductions_[i].reduced, reductions_[j].reduced)) {
      return StepWitness(SWitness{reductions_[i], reductions_[j], std::move(*phi)});
    }
    return std::nullopt;
  };
  switch (kind_) {
    case RelationKind::S:
      return s_step();
    case RelationKind::SOrC:
      if (auto w = s_step()) return w;
      return relate(RelationKind::C, a, b);
    default:
      return relate(kind_, a, b);
  }
}

bool RelationOracle::holds(std::size_t i, std::size_t j) const {
  switch (kind_) {
    case RelationKind::S:
      return pairs_isomorphic(reductions_[i].reduced, reductions_[j].reduced).has_value();
    case RelationKind::L:
      return l_related((*universe_)[i], (*universe_)[j]).has_value();
    default:
      return witness(i, j).has_value();
  }
}

ClosureResult::ClosureResult(const Universe& universe, RelationKind kind,
                             std::vector<std::vector<std::size_t>> classes, std::vector<std::size_t> class_of,
                             std::vector<ClosureEdge> edges)
    : universe_(&universe),
      kind_(kind),
      classes_(std::move(classes)),
      class_of_(std::move(class_of)),
      edges_(std::move(edges)),
      adjacency_(universe.size()) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[edges_[e].from].push_back(e);
    adjacency_[edges_[e].to].push_back(e);
  }
}

std::optional<WitnessChain> ClosureResult::chain(std::size_t i, std::size_t j) const {
  if (class_of_.at(i) != class_of_.at(j)) return std::nullopt;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> via(universe_->size(), none);
  std::vector<bool> seen(universe_->size(), false);
  std::deque<std::size_t> queue{i};
  seen[i] = true;
  while (!queue.empty() && !seen[j]) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t e : adjacency_[u]) {
      const std::size_t v = edges_[e].from == u ? edges_[e].to : edges_[e].from;
      if (seen[v]) continue;
      seen[v] = true;
      via[v] = e;
      queue.push_back(v);
    }
  }
  std::vector<std::size_t> path{j};
  std::vector<std::size_t> path_edges;
  for (std::size_t v = j; v != i;) {
    const ClosureEdge& edge = edges_[via[v]];
    path_edges.push_back(via[v]);
    v = edge.from == v ? edge.to : edge.from;
    path.push_back(v);
  }
  WitnessChain chain;
  for (auto it = path.rbegin(); it != path.rend(); ++it) chain.nodes.push_back((*universe_)[*it]);
  for (std::size_t k = path_edges.size(); k-- > 0;) {
    const ClosureEdge& edge = edges_[path_edges[k]];
    const std::size_t from_node = path[k + 1];
    const Orientation o = edge.from == from_node ? Orientation::Forward : Orientation::Backward;
    chain.steps.push_back(ChainStep{kind_, edge.witness, o});
  }
  return chain;
}

ClosureResult closure(const Universe& universe, RelationKind kind) {
  const std::size_t n = universe.size();
  const RelationOracle oracle(universe, kind);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<ClosureEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto w = oracle.witness(i, j);
      if (!w) continue;
      edges.push_back(ClosureEdge{i, j, std::move(*w)});
      const std::size_t ri = find(i);
      const std::size_t rj = find(j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> class_of_root(n, static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = find(x);
    if (class_of_root[r] == static_cast<std::size_t>(-1)) {
      class_of_root[r] = classes.size();
      classes.emplace_back();
    }
    class_of[x] = class_of_root[r];
    classes[class_of[x]].push_back(x);
  }
  return ClosureResult(universe, kind, std::move(classes), std::move(class_of), std::move(edges));
}

namespace {

class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}
  void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

void record(LawCheck& law, std::array<std::size_t, 3> triple, std::size_t count, std::size_t limit) {
  law.holds = false;
  law.violations += count;
  if (law.counterexamples.size() < limit) law.counterexamples.push_back(triple);
}

}  // namespace

RelationPropertiesReport relation_properties_report(const Universe& universe, RelationKind kind,
                                                    std::size_t counterexample_limit) {
  const std::size_t n = universe.size();
  const RelationOracle oracle(universe, kind);
  BitMatrix rel(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (oracle.holds(i, j)) rel.set(i, j);
    }
  }

  RelationPropertiesReport report{kind, n, {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel.get(i, i)) record(report.reflexive, {i, i, i}, 1, counterexample_limit);
    for (std::size_t j = 0; j < n; ++j) {
      if (rel.get(i, j) && !rel.get(j, i)) record(report.symmetric, {i, j, i}, 1, counterexample_limit);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* row_i = rel.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel.get(i, j)) continue;
      const std::uint64_t* row_j = rel.row(j);
      for (std::size_t w = 0; w < rel.words(); ++w) {
        std::uint64_t missing = row_j[w] & ~row_i[w];
        while (missing != 0) {
          const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
          missing &= missing - 1;
          record(report.transitive, {i, j, k}, 1, counterexample_limit);
        }
      }
    }
  }
  return report;
}

}  // namespace lplab
