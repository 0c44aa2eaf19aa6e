#include "lplab/constructions.hpp"

#include <numeric>

#include "lplab/error.hpp"

namespace lplab {

namespace {

struct Mixture {
  std::shared_ptr<const FiniteModel> model;
  std::size_t first_observed;
  std::size_t second_observed;
  Partition indicator;
};

Mixture mix(const ModelDataPair& p1, const ModelDataPair& p2, const Rational& w1, const Rational& w2) {
  require_same_parameters(p1, p2);
  const FiniteModel& m1 = p1.model();
  const FiniteModel& m2 = p2.model();
  const std::size_t n1 = m1.space_size();
  const std::size_t n2 = m2.space_size();
  std::vector<std::string> labels;
  for (const auto& l : m1.sample_labels()) labels.push_back("(1," + l + ")");
  for (const auto& l : m2.sample_labels()) labels.push_back("(2," + l + ")");
  std::vector<RationalVector> rows(m1.theta_size(), RationalVector(n1 + n2));
  for (std::size_t t = 0; t < m1.theta_size(); ++t) {
    for (std::size_t x = 0; x < n1; ++x) rows[t][x] = w1 * m1.prob(t, x);
    for (std::size_t x = 0; x < n2; ++x) rows[t][n1 + x] = w2 * m2.prob(t, x);
  }
  std::vector<std::size_t> indicator(n1 + n2, 0);
  std::fill(indicator.begin() + static_cast<std::ptrdiff_t>(n1), indicator.end(), 1);
  return Mixture{std::make_shared<const FiniteModel>(m1.theta_labels(), std::move(labels), std::move(rows)),
                 p1.observed(), n1 + p2.observed(), Partition::from_labels(indicator)};
}

SampleBijection identity(std::size_t n) {
  SampleBijection phi(n);
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  return phi;
}

void require_verified(const WitnessChain& chain, const char* what) {
  if (!verify_chain(chain)) throw Error(ErrorCode::InvariantViolation, std::string(what) + " failed re-verification");
}

Rational require_l(const ModelDataPair& p1, const ModelDataPair& p2) {
  auto c = l_related(p1, p2);
  if (!c) throw Error(ErrorCode::NotLRelated, "likelihoods are not proportional");
  return *c;
}

}  // namespace

BirnbaumMixture birnbaumize(const ModelDataPair& p1, const ModelDataPair& p2) {
  const Rational half(1, 2);
  Mixture m = mix(p1, p2, half, half);
  return BirnbaumMixture{m.model, ModelDataPair(m.model, m.first_observed), ModelDataPair(m.model, m.second_observed),
                         std::move(m.indicator)};
}

WitnessChain birnbaum_chain(const ModelDataPair& p1, const ModelDataPair& p2) {
  require_l(p1, p2);
  BirnbaumMixture b = birnbaumize(p1, p2);
  auto middle = s_related(b.first, b.second);
  if (!middle) throw Error(ErrorCode::InvariantViolation, "mixture points do not share a sufficient reduction");

  WitnessChain chain;
  chain.nodes = {p1, b.first, b.second, p2};
  chain.steps.push_back(ChainStep{RelationKind::C,
                                  CWitness{Parent::Second, b.indicator, identity(p1.model().space_size())},
                                  Orientation::Forward});
  chain.steps.push_back(ChainStep{RelationKind::S, std::move(*middle), Orientation::Forward});
  chain.steps.push_back(ChainStep{RelationKind::C,
                                  CWitness{Parent::First, b.indicator, identity(p2.model().space_size())},
                                  Orientation::Forward});
  require_verified(chain, "Birnbaum chain");
  return chain;
}

EfmParent efm_parent(const ModelDataPair& p1, const ModelDataPair& p2) {
  const Rational c = require_l(p1, p2);
  const Rational one(1);
  Mixture m = mix(p1, p2, one / (one + c), c / (one + c));
  const FiniteModel& m0 = *m.model;
  const std::size_t a = m.first_observed;
  const std::size_t b = m.second_observed;
  for (std::size_t t = 0; t < m0.theta_size(); ++t) {
    if (m0.prob(t, a) != m0.prob(t, b)) {
      throw Error(ErrorCode::InvariantViolation, "observed points of the parent differ in probability");
    }
  }

  SampleBijection swap = identity(m0.space_size());
  std::swap(swap[a], swap[b]);
  std::vector<std::size_t> swapped(m0.space_size());
  for (std::size_t x = 0; x < m0.space_size(); ++x) swapped[x] = m.indicator.block_of(swap[x]);
  Partition second = Partition::from_labels(swapped);

  ModelDataPair parent(m.model, a);
  // Block of (1,x1) under the second ancillary: (1,x1) followed by
  // component 2 without (2,x2), in index order.
  const std::size_t n1 = p1.model().space_size();
  SampleBijection to_p2;
  for (std::size_t x : second.block_containing(a)) to_p2.push_back(x == a ? p2.observed() : x - n1);

  WitnessChain chain;
  chain.nodes = {p1, parent, p2};
  chain.steps.push_back(ChainStep{RelationKind::C, CWitness{Parent::Second, m.indicator, identity(n1)},
                                  Orientation::Forward});
  chain.steps.push_back(ChainStep{RelationKind::C, CWitness{Parent::First, second, std::move(to_p2)},
                                  Orientation::Forward});
  require_verified(chain, "conditionality-only chain");
  return EfmParent{std::move(parent), std::move(m.indicator), std::move(second), std::move(swap), c, std::move(chain)};
}

DurbinChainAttempt durbin_birnbaum_chain(const ModelDataPair& p1, const ModelDataPair& p2) {
  require_l(p1, p2);
  DurbinChainAttempt attempt{birnbaumize(p1, p2), Partition{}, false, false, false, std::nullopt};
  attempt.mixture_mss = likelihood_partition(*attempt.mixture.mixture);
  attempt.indicator_admissible = is_function_of(attempt.mixture.indicator, attempt.mixture_mss);
  attempt.first_step_oracle = durbin_c_related(p1, attempt.mixture.first).has_value();
  attempt.last_step_oracle = durbin_c_related(attempt.mixture.second, p2).has_value();
  if (attempt.indicator_admissible) {
    WitnessChain chain = birnbaum_chain(p1, p2);
    chain.steps.front().kind = RelationKind::DurbinC;
    chain.steps.back().kind = RelationKind::DurbinC;
    if (verify_chain(chain)) attempt.chain = std::move(chain);
  }
  return attempt;
}

}  // namespace lplab
