#include "lplab/evidence.hpp"

#include <algorithm>
#include <set>

#include "lplab/ancillarity.hpp"
#include "lplab/error.hpp"
#include "lplab/sufficiency.hpp"

namespace lplab {

namespace {

void require_matching(const std::vector<std::string>& model_theta, const Prior& prior) {
  if (model_theta != prior.theta_labels()) {
    throw Error(ErrorCode::ParameterSpaceMismatch, "prior and model have different parameter spaces");
  }
}

Rational mass(const RationalVector& weights, const Hypothesis& a) {
  Rational total;
  for (std::size_t t : a) total += weights[t];
  return total;
}

void require_in_range(const Hypothesis& a, std::size_t theta_size) {
  for (std::size_t t : a) {
    if (t >= theta_size) throw Error(ErrorCode::UnknownTheta, "parameter index " + std::to_string(t) + " out of range");
  }
}

Hypothesis normalized(Hypothesis a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

Prior::Prior(std::vector<std::string> theta_labels, RationalVector weights)
    : theta_labels_(std::move(theta_labels)), weights_(std::move(weights)) {
  if (theta_labels_.empty() || theta_labels_.size() != weights_.size()) {
    throw Error(ErrorCode::InvalidPrior, "expected one weight per parameter value");
  }
  if (std::set<std::string>(theta_labels_.begin(), theta_labels_.end()).size() != theta_labels_.size()) {
    throw Error(ErrorCode::DuplicateLabel, "duplicate parameter label in prior");
  }
  for (std::size_t t = 0; t < weights_.size(); ++t) {
    if (!weights_[t].is_positive()) {
      throw Error(ErrorCode::InvalidPrior, "weight of " + theta_labels_[t] + " is " + weights_[t].str() + ", not > 0");
    }
  }
  if (sum(weights_) != Rational(1)) throw Error(ErrorCode::InvalidPrior, "weights sum to " + sum(weights_).str());
}

Prior Prior::uniform(const std::vector<std::string>& theta_labels) {
  const auto k = static_cast<std::int64_t>(theta_labels.size());
  return Prior(theta_labels, RationalVector(theta_labels.size(), Rational(1, k)));
}

Hypothesis hypothesis_from_labels(const std::vector<std::string>& theta_labels, const std::vector<std::string>& labels) {
  Hypothesis a;
  for (const auto& label : labels) {
    const auto it = std::find(theta_labels.begin(), theta_labels.end(), label);
    if (it == theta_labels.end()) throw Error(ErrorCode::UnknownTheta, "unknown parameter label '" + label + "'");
    a.push_back(static_cast<std::size_t>(it - theta_labels.begin()));
  }
  return normalized(std::move(a));
}

RationalVector prior_predictive(const FiniteModel& model, const Prior& prior) {
  require_matching(model.theta_labels(), prior);
  RationalVector m(model.space_size());
  for (std::size_t x = 0; x < model.space_size(); ++x) {
    for (std::size_t t = 0; t < model.theta_size(); ++t) m[x] += prior.weight(t) * model.prob(t, x);
  }
  return m;
}

RationalVector posterior(const ModelDataPair& pair, const Prior& prior) {
  require_matching(pair.theta_labels(), prior);
  const FiniteModel& model = pair.model();
  RationalVector joint(model.theta_size());
  for (std::size_t t = 0; t < model.theta_size(); ++t) joint[t] = prior.weight(t) * model.prob(t, pair.observed());
  const Rational m = sum(joint);
  for (auto& v : joint) v /= m;
  return joint;
}

RationalVector relative_belief(const ModelDataPair& pair, const Prior& prior) {
  RationalVector rb = posterior(pair, prior);
  for (std::size_t t = 0; t < rb.size(); ++t) rb[t] /= prior.weight(t);
  return rb;
}

BayesFactor bayes_factor(const ModelDataPair& pair, const Prior& prior, const Hypothesis& hypothesis) {
  const Hypothesis a = normalized(hypothesis);
  require_in_range(a, pair.model().theta_size());
  if (a.empty() || a.size() == pair.model().theta_size()) {
    throw Error(ErrorCode::DegenerateHypothesis, "Bayes factor needs 0 < P(A) < 1");
  }
  const RationalVector post = posterior(pair, prior);
  const Rational post_a = mass(post, a);
  const Rational prior_a = mass(prior.weights(), a);
  const Rational post_not_a = Rational(1) - post_a;
  if (post_not_a.is_zero()) return BayesFactor{true, Rational(0)};
  return BayesFactor{false, (post_a / post_not_a) / (prior_a / (Rational(1) - prior_a))};
}

std::string_view to_string(EvidenceDirection direction) {
  switch (direction) {
    case EvidenceDirection::For: return "for";
    case EvidenceDirection::Against: return "against";
    case EvidenceDirection::Neutral: return "neutral";
  }
  return "?";
}

EvidenceDirection evidence_direction(const ModelDataPair& pair, const Prior& prior, const Hypothesis& hypothesis) {
  const Hypothesis a = normalized(hypothesis);
  if (a.empty()) throw Error(ErrorCode::EmptyHypothesis, "hypothesis has no parameter values");
  require_in_range(a, pair.model().theta_size());
  const Rational post_a = mass(posterior(pair, prior), a);
  const Rational prior_a = mass(prior.weights(), a);
  if (post_a > prior_a) return EvidenceDirection::For;
  if (post_a < prior_a) return EvidenceDirection::Against;
  return EvidenceDirection::Neutral;
}

std::vector<std::size_t> rb_estimate(const ModelDataPair& pair, const Prior& prior) {
  const RationalVector rb = relative_belief(pair, prior);
  const Rational best = *std::max_element(rb.begin(), rb.end());
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < rb.size(); ++t) {
    if (rb[t] == best) out.push_back(t);
  }
  return out;
}

Rational rb_strength(const ModelDataPair& pair, const Prior& prior, std::size_t theta0) {
  if (theta0 >= pair.model().theta_size()) {
    throw Error(ErrorCode::UnknownTheta, "parameter index " + std::to_string(theta0) + " out of range");
  }
  const RationalVector post = posterior(pair, prior);
  const RationalVector rb = relative_belief(pair, prior);
  Rational total;
  for (std::size_t t = 0; t < rb.size(); ++t) {
    if (rb[t] <= rb[theta0]) total += post[t];
  }
  return total;
}

EvidenceReport analyze_evidence(const ModelDataPair& pair, const Prior& prior,
                                const std::vector<Hypothesis>& extra_hypotheses) {
  EvidenceReport report;
  report.prior_predictive_at_data = prior_predictive(pair.model(), prior)[pair.observed()];
  report.posterior = posterior(pair, prior);
  report.relative_belief = relative_belief(pair, prior);
  report.estimate = rb_estimate(pair, prior);

  const std::size_t k = pair.model().theta_size();
  std::vector<Hypothesis> all;
  for (std::size_t t = 0; t < k; ++t) all.push_back({t});
  for (const auto& h : extra_hypotheses) all.push_back(normalized(h));

  for (const auto& a : all) {
    require_in_range(a, k);
    HypothesisRecord record{a,
                            mass(prior.weights(), a),
                            mass(report.posterior, a),
                            Rational(0),
                            std::nullopt,
                            evidence_direction(pair, prior, a),
                            std::nullopt};
    record.relative_belief = record.posterior_probability / record.prior_probability;
    if (a.size() < k) record.bayes_factor = bayes_factor(pair, prior, a);
    if (a.size() == 1) record.strength = rb_strength(pair, prior, a.front());
    report.hypotheses.push_back(std::move(record));
  }
  return report;
}

Rational check_model_mss(const ModelDataPair& pair) {
  const FiniteModel& model = pair.model();
  const Partition mss = likelihood_partition(model);
  const auto& block = mss.block_containing(pair.observed());

  // q(x) = f_theta(x) / g_theta(block), required to be the same for every
  // theta with g_theta(block) > 0.
  std::optional<RationalVector> q;
  for (std::size_t t = 0; t < model.theta_size(); ++t) {
    Rational g;
    for (std::size_t x : block) g += model.prob(t, x);
    if (g.is_zero()) continue;
    RationalVector candidate;
    for (std::size_t x : block) candidate.push_back(model.prob(t, x) / g);
    if (!q) {
      q = std::move(candidate);
    } else if (*q != candidate) {
      throw Error(ErrorCode::InvariantViolation, "conditional distribution given the sufficient block depends on theta");
    }
  }
  const auto obs_pos = static_cast<std::size_t>(std::find(block.begin(), block.end(), pair.observed()) - block.begin());
  Rational p;
  for (const auto& v : *q) {
    if (v <= (*q)[obs_pos]) p += v;
  }
  return p;
}

Rational check_model_ancillary(const ModelDataPair& pair, const Partition& ancillary) {
  const RationalVector masses = ancillary_block_masses(pair.model(), ancillary);
  const Rational& observed = masses[ancillary.block_of(pair.observed())];
  Rational p;
  for (const auto& w : masses) {
    if (w <= observed) p += w;
  }
  return p;
}

Rational check_prior_conflict(const ModelDataPair& pair, const Prior& prior) {
  require_matching(pair.theta_labels(), prior);
  const ReductionResult reduction = reduce_to_mss(pair);
  const RationalVector m = prior_predictive(reduction.reduced.model(), prior);
  const Rational& observed = m[reduction.reduced.observed()];
  Rational p;
  for (const auto& v : m) {
    if (v <= observed) p += v;
  }
  return p;
}

}  // namespace lplab
