#include "lplab/relations.hpp"

#include <string>

#include "lplab/error.hpp"

namespace lplab {

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::S: return "S";
    case RelationKind::C: return "C";
    case RelationKind::L: return "L";
    case RelationKind::SOrC: return "S_OR_C";
    case RelationKind::DurbinC: return "DURBIN_C";
  }
  return "?";
}

RelationKind parse_relation_kind(std::string_view text) {
  if (text == "S") return RelationKind::S;
  if (text == "C") return RelationKind::C;
  if (text == "L") return RelationKind::L;
  if (text == "SC" || text == "S_OR_C") return RelationKind::SOrC;
  if (text == "DURBIN" || text == "DURBIN_C") return RelationKind::DurbinC;
  throw Error(ErrorCode::ParseError, "unknown relation kind '" + std::string(text) + "'");
}

std::optional<Rational> l_related(const ModelDataPair& p1, const ModelDataPair& p2) {
  require_same_parameters(p1, p2);
  return proportional(likelihood_vector(p1), likelihood_vector(p2));
}

std::optional<StepWitness> relate(RelationKind kind, const ModelDataPair& p1, const ModelDataPair& p2) {
  switch (kind) {
    case RelationKind::S:
      if (auto w = s_related(p1, p2)) return StepWitness(std::move(*w));
      return std::nullopt;
    case RelationKind::C:
      if (auto w = c_related(p1, p2)) return StepWitness(std::move(*w));
      return std::nullopt;
    case RelationKind::DurbinC:
      if (auto w = durbin_c_related(p1, p2)) return StepWitness(std::move(*w));
      return std::nullopt;
    case RelationKind::L:
      if (auto c = l_related(p1, p2)) return StepWitness(LWitness{std::move(*c)});
      return std::nullopt;
    case RelationKind::SOrC:
      if (auto w = s_related(p1, p2)) return StepWitness(std::move(*w));
      if (auto w = c_related(p1, p2)) return StepWitness(std::move(*w));
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool replay_s(const ModelDataPair& a, const ModelDataPair& b, const SWitness& w) {
  const ReductionResult ra = reduce_to_mss(a);
  const ReductionResult rb = reduce_to_mss(b);
  if (!(ra.reduced == w.first.reduced) || !(rb.reduced == w.second.reduced)) return false;
  const FiniteModel& m1 = ra.reduced.model();
  const FiniteModel& m2 = rb.reduced.model();
  if (w.bijection.size() != m1.space_size() || m1.space_size() != m2.space_size()) return false;
  std::vector<bool> hit(m2.space_size(), false);
  for (std::size_t x = 0; x < w.bijection.size(); ++x) {
    const std::size_t y = w.bijection[x];
    if (y >= hit.size() || hit[y] || m1.column(x) != m2.column(y)) return false;
    hit[y] = true;
  }
  return w.bijection[ra.reduced.observed()] == rb.reduced.observed();
}

bool durbin_admissible(const ModelDataPair& a, const ModelDataPair& b, const CWitness& w) {
  const ModelDataPair& parent = w.parent == Parent::First ? a : b;
  return is_function_of(w.ancillary, likelihood_partition(parent.model()));
}

}  // namespace

bool verify_step(const ModelDataPair& x, const ModelDataPair& y, const ChainStep& step) {
  const ModelDataPair& a = step.orientation == Orientation::Forward ? x : y;
  const ModelDataPair& b = step.orientation == Orientation::Forward ? y : x;
  if (a.theta_labels() != b.theta_labels()) return false;

  const bool replayed = std::visit(
      [&](const auto& w) -> bool {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, SWitness>) {
          return (step.kind == RelationKind::S || step.kind == RelationKind::SOrC) && replay_s(a, b, w);
        } else if constexpr (std::is_same_v<W, CWitness>) {
          if (step.kind == RelationKind::DurbinC && !durbin_admissible(a, b, w)) return false;
          return (step.kind == RelationKind::C || step.kind == RelationKind::SOrC ||
                  step.kind == RelationKind::DurbinC) &&
                 verify_c_witness(a, b, w);
        } else {
          const auto c = proportional(likelihood_vector(a), likelihood_vector(b));
          return step.kind == RelationKind::L && c && *c == w.factor;
        }
      },
      step.witness);
  if (!replayed) return false;

  // Independent oracle for the specific relation the witness certifies.
  if (std::holds_alternative<SWitness>(step.witness)) return s_related(a, b).has_value();
  if (std::holds_alternative<CWitness>(step.witness)) {
    return step.kind == RelationKind::DurbinC ? durbin_c_related(a, b).has_value() : c_related(a, b).has_value();
  }
  return l_related(a, b).has_value();
}

bool verify_chain(const WitnessChain& chain) {
  if (chain.nodes.empty() || chain.steps.size() + 1 != chain.nodes.size()) return false;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    if (!verify_step(chain.nodes[i], chain.nodes[i + 1], chain.steps[i])) return false;
  }
  return true;
}

}  // namespace lplab
