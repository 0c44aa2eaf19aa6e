#pragma once

#include <memory>
#include <optional>

#include "lplab/relations.hpp"

namespace lplab {

/// Equal-weight mixture of two models on the disjoint union of their sample
/// spaces, f*(i, x) = f^i(x) / 2, labelled "(1,x)" and "(2,x)". Component 1
/// points come first.
struct BirnbaumMixture {
  std::shared_ptr<const FiniteModel> mixture;
  ModelDataPair first;   // (M*, (1, x1))
  ModelDataPair second;  // (M*, (2, x2))
  Partition indicator;   // component indicator, ancillary with masses (1/2, 1/2)
};

/// Throws Error(ParameterSpaceMismatch).
BirnbaumMixture birnbaumize(const ModelDataPair& p1, const ModelDataPair& p2);

/// p1 -C- (M*,(1,x1)) -S- (M*,(2,x2)) -C- p2, every step verified before
/// return. Throws Error(NotLRelated).
WitnessChain birnbaum_chain(const ModelDataPair& p1, const ModelDataPair& p2);

/// Unequal-weight mixture on the disjoint union with weights 1/(1+c) and
/// c/(1+c), where likelihood(p1) = c * likelihood(p2). The two observed
/// points get identical probabilities, so swapping them preserves every f_theta
/// and carries the component indicator to a second ancillary.
struct EfmParent {
  ModelDataPair parent;         // (M0, (1, x1))
  Partition first_ancillary;    // component indicator; conditions parent to p1
  Partition second_ancillary;   // indicator composed with the swap; conditions parent to p2
  SampleBijection swap;         // exchanges (1, x1) and (2, x2)
  Rational factor;              // c
  WitnessChain chain;           // p1 -C- parent -C- p2
};

/// Throws Error(NotLRelated).
EfmParent efm_parent(const ModelDataPair& p1, const ModelDataPair& p2);

/// Birnbaum's construction with conditioning witnesses restricted to
/// ancillaries that are functions of a minimal sufficient statistic.
struct DurbinChainAttempt {
  BirnbaumMixture mixture;
  Partition mixture_mss;
  /// component indicator is a function of mixture_mss
  bool indicator_admissible = false;
  /// the restricted oracle finds any admissible ancillary for the outer steps
  bool first_step_oracle = false;
  bool last_step_oracle = false;
  /// present only if the construction goes through with admissible witnesses
  std::optional<WitnessChain> chain;

  bool failed() const { return !chain.has_value(); }
};

/// Throws Error(NotLRelated).
DurbinChainAttempt durbin_birnbaum_chain(const ModelDataPair& p1, const ModelDataPair& p2);

}  // namespace lplab
