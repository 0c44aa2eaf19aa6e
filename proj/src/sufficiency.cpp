#include "lplab/sufficiency.hpp"

#include "lplab/error.hpp"

namespace lplab {

Partition likelihood_partition(const FiniteModel& model) {
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> labels(model.space_size());
  for (std::size_t x = 0; x < model.space_size(); ++x) {
    std::size_t b = 0;
    while (b < representatives.size() && !proportional(model.column(x), model.column(representatives[b]))) ++b;
    if (b == representatives.size()) representatives.push_back(x);
    labels[x] = b;
  }
  return Partition::from_labels(labels);
}

bool is_sufficient(const FiniteModel& model, const Partition& partition) {
  if (partition.ground_size() != model.space_size()) {
    throw Error(ErrorCode::GroundSetMismatch, "partition is not over the model's sample space");
  }
  for (const auto& block : partition.blocks()) {
    for (std::size_t x : block) {
      if (!proportional(model.column(x), model.column(block.front()))) return false;
    }
  }
  return true;
}

FiniteModel statistic_induced_model(const FiniteModel& model, const Partition& partition) {
  if (partition.ground_size() != model.space_size()) {
    throw Error(ErrorCode::GroundSetMismatch, "partition is not over the model's sample space");
  }
  std::vector<RationalVector> rows(model.theta_size(), RationalVector(partition.block_count()));
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < partition.block_count(); ++b) {
    std::string label;
    for (std::size_t x : partition.blocks()[b]) {
      if (!label.empty()) label += ' ';
      label += model.sample_labels()[x];
      for (std::size_t t = 0; t < model.theta_size(); ++t) rows[t][b] += model.prob(t, x);
    }
    labels.push_back(std::move(label));
  }
  return FiniteModel(model.theta_labels(), std::move(labels), std::move(rows));
}

ReductionResult reduce_to_mss(const ModelDataPair& pair) {
  const FiniteModel& m = pair.model();
  Partition partition = likelihood_partition(m);
  FiniteModel quotient = statistic_induced_model(m, partition);

  RationalVector h(m.space_size());
  for (std::size_t x = 0; x < m.space_size(); ++x) {
    const std::size_t b = partition.block_of(x);
    std::optional<Rational> factor;
    for (std::size_t t = 0; t < m.theta_size(); ++t) {
      const Rational& g = quotient.prob(t, b);
      if (g.is_zero()) continue;
      Rational candidate = m.prob(t, x) / g;
      if (!factor) {
        factor = std::move(candidate);
      } else if (*factor != candidate) {
        throw Error(ErrorCode::InvariantViolation, "theta-dependent factor within a likelihood block");
      }
    }
    h[x] = *factor;
  }
  const std::size_t observed_block = partition.block_of(pair.observed());
  std::vector<std::size_t> block_map = partition.labels();
  return ReductionResult{ModelDataPair(std::move(quotient), observed_block), std::move(partition),
                         std::move(block_map), std::move(h)};
}

std::optional<SWitness> s_related(const ModelDataPair& p1, const ModelDataPair& p2) {
  require_same_parameters(p1, p2);
  ReductionResult r1 = reduce_to_mss(p1);
  ReductionResult r2 = reduce_to_mss(p2);
  auto phi = pairs_isomorphic(r1.reduced, r2.reduced);
  if (!phi) return std::nullopt;
  return SWitness{std::move(r1), std::move(r2), std::move(*phi)};
}

}  // namespace lplab
