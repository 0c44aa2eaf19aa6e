#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lplab/relations.hpp"

namespace lplab {

/// A finite set of model-data pairs over one parameter space, held in
/// canonical form with isomorphic duplicates removed (first occurrence wins).
class Universe {
 public:
  Universe() = default;
  /// Throws Error(ParameterSpaceMismatch) if members disagree on Theta.
  explicit Universe(const std::vector<ModelDataPair>& pairs);

  const std::vector<ModelDataPair>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const ModelDataPair& operator[](std::size_t i) const { return members_[i]; }

  /// Index of the member isomorphic to `pair`, if any.
  std::optional<std::size_t> find(const ModelDataPair& pair) const;

  /// Adds a pair unless an isomorphic member already exists; returns its index.
  std::size_t insert(const ModelDataPair& pair);

 private:
  std::vector<ModelDataPair> members_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One-step relation on universe members with per-member precomputation
/// (reductions, likelihood vectors) cached. Decisions are identical to the
/// free functions s_related / c_related / l_related / durbin_c_related.
class RelationOracle {
 public:
  RelationOracle(const Universe& universe, RelationKind kind);

  RelationKind kind() const { return kind_; }
  bool holds(std::size_t i, std::size_t j) const;
  std::optional<StepWitness> witness(std::size_t i, std::size_t j) const;

 private:
  const Universe* universe_;
  RelationKind kind_;
  std::vector<ReductionResult> reductions_;
};

struct ClosureEdge {
  std::size_t from;
  std::size_t to;
  StepWitness witness;  // certifies (members[from], members[to])
};

class ClosureResult {
 public:
  ClosureResult(const Universe& universe, RelationKind kind, std::vector<std::vector<std::size_t>> classes,
                std::vector<std::size_t> class_of, std::vector<ClosureEdge> edges);

  RelationKind kind() const { return kind_; }
  /// Equivalence classes, each sorted, ordered by smallest member.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_of(std::size_t member) const { return class_of_[member]; }
  const std::vector<ClosureEdge>& edges() const { return edges_; }

  /// Shortest chain of recorded steps from member i to member j; absent if
  /// they lie in different classes.
  std::optional<WitnessChain> chain(std::size_t i, std::size_t j) const;

 private:
  const Universe* universe_;
  RelationKind kind_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<ClosureEdge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;  // edge indices
};

/// Connected components of the one-step relation restricted to the
/// universe. The result refers to `universe`, which must outlive it.
ClosureResult closure(const Universe& universe, RelationKind kind);

struct LawCheck {
  bool holds = true;
  std::size_t violations = 0;
  /// (i, j, k) member indices: reflexivity (i,i,i); symmetry (i,j,i) meaning
  /// i R j but not j R i; transitivity i R j, j R k, not i R k.
  std::vector<std::array<std::size_t, 3>> counterexamples;
};

struct RelationPropertiesReport {
  RelationKind kind;
  std::size_t universe_size = 0;
  LawCheck reflexive;
  LawCheck symmetric;
  LawCheck transitive;
};

RelationPropertiesReport relation_properties_report(const Universe& universe, RelationKind kind,
                                                    std::size_t counterexample_limit = 16);

}  // namespace lplab
