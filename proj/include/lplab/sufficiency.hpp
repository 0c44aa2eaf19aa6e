#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lplab/model.hpp"
#include "lplab/partition.hpp"

namespace lplab {

/// Points grouped by proportional likelihood vectors: the minimal sufficient
/// partition of a finite model. Blocks are in order of first point.
Partition likelihood_partition(const FiniteModel& model);

/// True iff the conditional distribution given each block is theta-free,
/// i.e. likelihood vectors within every block are pairwise proportional.
bool is_sufficient(const FiniteModel& model, const Partition& partition);

/// Marginal model of a statistic: g_theta(B) = sum_{x in B} f_theta(x).
/// Sample labels are the formatted blocks ("x1 x2"). Throws
/// Error(GroundSetMismatch) if the partition is over a different space.
FiniteModel statistic_induced_model(const FiniteModel& model, const Partition& partition);

struct ReductionResult {
  ModelDataPair reduced;
  Partition partition;
  /// original sample index -> block index in `reduced`
  std::vector<std::size_t> block_map;
  /// h(x) with f_theta(x) = g_theta(block(x)) * h(x) for every theta
  RationalVector theta_free_factor;
};

/// Quotient of the pair over its minimal sufficient partition.
ReductionResult reduce_to_mss(const ModelDataPair& pair);

struct SWitness {
  ReductionResult first;
  ReductionResult second;
  /// isomorphism from first.reduced onto second.reduced
  SampleBijection bijection;
};

/// Present iff the canonical minimal sufficient reductions are isomorphic.
/// Throws Error(ParameterSpaceMismatch).
std::optional<SWitness> s_related(const ModelDataPair& p1, const ModelDataPair& p2);

}  // namespace lplab
