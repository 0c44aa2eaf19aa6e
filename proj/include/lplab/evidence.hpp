#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lplab/model.hpp"
#include "lplab/partition.hpp"

namespace lplab {

/// Strictly positive weights on a labelled parameter space, summing to 1.
class Prior {
 public:
  /// Throws Error(InvalidPrior) or Error(DuplicateLabel).
  Prior(std::vector<std::string> theta_labels, RationalVector weights);

  static Prior uniform(const std::vector<std::string>& theta_labels);

  const std::vector<std::string>& theta_labels() const { return theta_labels_; }
  const RationalVector& weights() const { return weights_; }
  const Rational& weight(std::size_t theta) const { return weights_[theta]; }

  friend bool operator==(const Prior&, const Prior&) = default;

 private:
  std::vector<std::string> theta_labels_;
  RationalVector weights_;
};

/// Set of parameter indices.
using Hypothesis = std::vector<std::size_t>;

/// Resolves labels to a sorted, duplicate-free index set. Throws
/// Error(UnknownTheta).
Hypothesis hypothesis_from_labels(const std::vector<std::string>& theta_labels, const std::vector<std::string>& labels);

/// m(x) = sum_theta pi(theta) f_theta(x).
RationalVector prior_predictive(const FiniteModel& model, const Prior& prior);

RationalVector posterior(const ModelDataPair& pair, const Prior& prior);

/// RB(theta | x) = f_theta(x) / m(x).
RationalVector relative_belief(const ModelDataPair& pair, const Prior& prior);

/// Posterior odds over prior odds; `infinite` when P(A^c | x) = 0.
struct BayesFactor {
  bool infinite = false;
  Rational value;

  friend bool operator==(const BayesFactor&, const BayesFactor&) = default;
  std::string str() const { return infinite ? "inf" : value.str(); }
};

/// Throws Error(DegenerateHypothesis) for A empty or A = Theta.
BayesFactor bayes_factor(const ModelDataPair& pair, const Prior& prior, const Hypothesis& hypothesis);

enum class EvidenceDirection { For, Against, Neutral };

std::string_view to_string(EvidenceDirection direction);

/// Compares P(A | x) with P(A). Throws Error(EmptyHypothesis).
EvidenceDirection evidence_direction(const ModelDataPair& pair, const Prior& prior, const Hypothesis& hypothesis);

/// All maximizers of RB(. | x), in parameter order.
std::vector<std::size_t> rb_estimate(const ModelDataPair& pair, const Prior& prior);

/// Posterior probability of {theta : RB(theta | x) <= RB(theta0 | x)}.
/// Throws Error(UnknownTheta).
Rational rb_strength(const ModelDataPair& pair, const Prior& prior, std::size_t theta0);

struct HypothesisRecord {
  Hypothesis hypothesis;
  Rational prior_probability;
  Rational posterior_probability;
  Rational relative_belief;
  std::optional<BayesFactor> bayes_factor;  // absent for A = Theta
  EvidenceDirection direction;
  std::optional<Rational> strength;  // singletons only
};

struct EvidenceReport {
  Rational prior_predictive_at_data;
  RationalVector posterior;
  RationalVector relative_belief;
  std::vector<std::size_t> estimate;
  /// every singleton, then any extra hypotheses in the order given
  std::vector<HypothesisRecord> hypotheses;
};

EvidenceReport analyze_evidence(const ModelDataPair& pair, const Prior& prior,
                                const std::vector<Hypothesis>& extra_hypotheses = {});

/// Conditional tail probability of the data given its minimal sufficient
/// block: sum of q(x') over the block with q(x') <= q(x_obs).
Rational check_model_mss(const ModelDataPair& pair);

/// Tail probability of the observed ancillary value under its theta-free
/// distribution. Throws Error(NotAncillary).
Rational check_model_ancillary(const ModelDataPair& pair, const Partition& ancillary);

/// Prior predictive tail probability of the minimal sufficient statistic at
/// its observed value (ties included).
Rational check_prior_conflict(const ModelDataPair& pair, const Prior& prior);

}  // namespace lplab
