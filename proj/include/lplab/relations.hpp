#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "lplab/ancillarity.hpp"
#include "lplab/model.hpp"
#include "lplab/sufficiency.hpp"

namespace lplab {

enum class RelationKind { S, C, L, SOrC, DurbinC };

std::string_view to_string(RelationKind kind);
/// Accepts S, C, L, SC, S_OR_C, DURBIN, DURBIN_C. Throws Error(ParseError).
RelationKind parse_relation_kind(std::string_view text);

/// c > 0 with likelihood(p1) = c * likelihood(p2). Throws
/// Error(ParameterSpaceMismatch).
std::optional<Rational> l_related(const ModelDataPair& p1, const ModelDataPair& p2);

struct LWitness {
  Rational factor;
};

using StepWitness = std::variant<SWitness, CWitness, LWitness>;

/// One-step relation oracle. S_OR_C tries S before C.
std::optional<StepWitness> relate(RelationKind kind, const ModelDataPair& p1, const ModelDataPair& p2);

/// Forward: (nodes[i], nodes[i+1]) is the ordered pair the witness speaks
/// about. Backward: (nodes[i+1], nodes[i]).
enum class Orientation { Forward, Backward };

struct ChainStep {
  RelationKind kind;
  StepWitness witness;
  Orientation orientation = Orientation::Forward;
};

/// nodes.front() = x, nodes.back() = y, and steps[i] relates nodes[i] and
/// nodes[i+1].
struct WitnessChain {
  std::vector<ModelDataPair> nodes;
  std::vector<ChainStep> steps;
};

/// Re-checks a single step: the recorded witness must replay exactly and the
/// independent oracle for the step's kind must agree that the step holds.
bool verify_step(const ModelDataPair& a, const ModelDataPair& b, const ChainStep& step);

bool verify_chain(const WitnessChain& chain);

}  // namespace lplab
