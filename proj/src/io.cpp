#include "lplab/io.hpp"

#include <fstream>
#include <sstream>

#include "lplab/error.hpp"

namespace lplab::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) malformed(std::string(what) + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json rationals(const RationalVector& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

RationalVector rationals_from(const Json& j, const char* what) {
  RationalVector out;
  for (const auto& s : string_list(j, what)) out.push_back(Rational::parse(s));
  return out;
}

std::size_t index_in(const std::vector<std::string>& labels, const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::UnknownLabel, "unknown sample label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

Json bijection_json(const SampleBijection& phi, const std::vector<std::string>& from,
                    const std::vector<std::string>& to) {
  Json out = Json::array();
  for (std::size_t i = 0; i < phi.size(); ++i) out.push_back(Json::array({from[i], to[phi[i]]}));
  return out;
}

SampleBijection bijection_from(const Json& j, const std::vector<std::string>& from,
                               const std::vector<std::string>& to) {
  if (!j.is_array() || j.size() != from.size()) malformed("bijection must map every point");
  SampleBijection phi(from.size());
  std::vector<bool> seen(from.size(), false);
  for (const auto& entry : j) {
    const auto labels = string_list(entry, "bijection entry");
    if (labels.size() != 2) malformed("bijection entries are [from, to]");
    const std::size_t i = index_in(from, labels[0]);
    if (seen[i]) malformed("bijection maps a point twice");
    seen[i] = true;
    phi[i] = index_in(to, labels[1]);
  }
  return phi;
}

Json hypothesis_json(const Hypothesis& a, const std::vector<std::string>& theta_labels) {
  Json out = Json::array();
  for (std::size_t t : a) out.push_back(theta_labels[t]);
  return out;
}

ReductionResult reduction_from(const Json& j, const ModelDataPair& source) {
  ModelDataPair reduced = pair_from_json(field(j, "reduced"));
  Partition partition = partition_from_json(field(j, "partition"), source.model().sample_labels());
  const Json& factors = field(j, "factor");
  if (!factors.is_object()) malformed("factor must map sample labels to rationals");
  RationalVector h(source.model().space_size());
  for (std::size_t x = 0; x < h.size(); ++x) {
    const auto& label = source.model().sample_labels()[x];
    if (!factors.contains(label)) malformed("factor missing for '" + label + "'");
    h[x] = Rational::parse(factors.at(label).get<std::string>());
  }
  std::vector<std::size_t> block_map = partition.labels();
  return ReductionResult{std::move(reduced), std::move(partition), std::move(block_map), std::move(h)};
}

}  // namespace

Json to_json(const FiniteModel& model) {
  Json probs = Json::array();
  for (const auto& row : model.probs()) probs.push_back(rationals(row));
  return Json{{"theta", model.theta_labels()}, {"space", model.sample_labels()}, {"probs", std::move(probs)}};
}

Json to_json(const ModelDataPair& pair) {
  Json j = to_json(pair.model());
  j["observed"] = pair.observed_label();
  return j;
}

Json to_json(const Prior& prior) {
  return Json{{"theta", prior.theta_labels()}, {"weights", rationals(prior.weights())}};
}

Json to_json(const Partition& partition, const std::vector<std::string>& sample_labels) {
  Json out = Json::array();
  for (const auto& block : partition.blocks()) {
    Json b = Json::array();
    for (std::size_t x : block) b.push_back(sample_labels.at(x));
    out.push_back(std::move(b));
  }
  return out;
}

Json to_json(const CWitness& witness, const ModelDataPair& a, const ModelDataPair& b) {
  const ModelDataPair& parent = witness.parent == Parent::First ? a : b;
  const ModelDataPair& child = witness.parent == Parent::First ? b : a;
  const auto& parent_labels = parent.model().sample_labels();
  std::vector<std::string> conditional_labels;
  for (std::size_t x : witness.ancillary.block_containing(parent.observed())) conditional_labels.push_back(parent_labels[x]);
  return Json{{"relation", "C"},
              {"parent", witness.parent == Parent::First ? "first" : "second"},
              {"ancillary", to_json(witness.ancillary, parent_labels)},
              {"bijection", bijection_json(witness.bijection, conditional_labels, child.model().sample_labels())}};
}

Json to_json(const ReductionResult& reduction, const ModelDataPair& source) {
  Json factor = Json::object();
  for (std::size_t x = 0; x < source.model().space_size(); ++x) {
    factor[source.model().sample_labels()[x]] = reduction.theta_free_factor[x].str();
  }
  return Json{{"reduced", to_json(reduction.reduced)},
              {"partition", to_json(reduction.partition, source.model().sample_labels())},
              {"factor", std::move(factor)}};
}

Json to_json(const SWitness& witness, const ModelDataPair& a, const ModelDataPair& b) {
  return Json{{"relation", "S"},
              {"first_reduction", to_json(witness.first, a)},
              {"second_reduction", to_json(witness.second, b)},
              {"bijection", bijection_json(witness.bijection, witness.first.reduced.model().sample_labels(),
                                           witness.second.reduced.model().sample_labels())}};
}

Json to_json(const StepWitness& witness, const ModelDataPair& a, const ModelDataPair& b) {
  return std::visit(
      [&](const auto& w) -> Json {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, SWitness>) {
          return to_json(w, a, b);
        } else if constexpr (std::is_same_v<W, CWitness>) {
          return to_json(w, a, b);
        } else {
          return Json{{"relation", "L"}, {"factor", w.factor.str()}};
        }
      },
      witness);
}

Json to_json(const WitnessChain& chain) {
  Json nodes = Json::array();
  for (const auto& n : chain.nodes) nodes.push_back(to_json(n));
  Json steps = Json::array();
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const ChainStep& step = chain.steps[i];
    const bool forward = step.orientation == Orientation::Forward;
    const ModelDataPair& a = forward ? chain.nodes[i] : chain.nodes[i + 1];
    const ModelDataPair& b = forward ? chain.nodes[i + 1] : chain.nodes[i];
    steps.push_back(Json{{"kind", to_string(step.kind)},
                         {"orientation", forward ? "forward" : "backward"},
                         {"witness", to_json(step.witness, a, b)}});
  }
  return Json{{"nodes", std::move(nodes)}, {"steps", std::move(steps)}};
}

Json to_json(const BayesFactor& bf) { return bf.str(); }

Json to_json(const EvidenceReport& report, const std::vector<std::string>& theta_labels) {
  Json hypotheses = Json::array();
  for (const auto& h : report.hypotheses) {
    Json j{{"hypothesis", hypothesis_json(h.hypothesis, theta_labels)},
           {"prior", h.prior_probability.str()},
           {"posterior", h.posterior_probability.str()},
           {"relative_belief", h.relative_belief.str()},
           {"bayes_factor", h.bayes_factor ? to_json(*h.bayes_factor) : Json(nullptr)},
           {"direction", to_string(h.direction)},
           {"strength", h.strength ? Json(h.strength->str()) : Json(nullptr)}};
    hypotheses.push_back(std::move(j));
  }
  return Json{{"prior_predictive_at_data", report.prior_predictive_at_data.str()},
              {"posterior", rationals(report.posterior)},
              {"relative_belief", rationals(report.relative_belief)},
              {"estimate", hypothesis_json(report.estimate, theta_labels)},
              {"hypotheses", std::move(hypotheses)}};
}

Json to_json(const RelationPropertiesReport& report) {
  auto law = [](const LawCheck& l) {
    Json triples = Json::array();
    for (const auto& t : l.counterexamples) triples.push_back(Json::array({t[0], t[1], t[2]}));
    return Json{{"holds", l.holds}, {"violations", l.violations}, {"counterexamples", std::move(triples)}};
  };
  return Json{{"kind", to_string(report.kind)},
              {"universe_size", report.universe_size},
              {"reflexive", law(report.reflexive)},
              {"symmetric", law(report.symmetric)},
              {"transitive", law(report.transitive)}};
}

FiniteModel model_from_json(const Json& j) {
  RawModel raw;
  raw.theta = string_list(field(j, "theta"), "theta");
  raw.space = string_list(field(j, "space"), "space");
  const Json& probs = field(j, "probs");
  if (!probs.is_array()) malformed("probs must be a list of rows");
  for (const auto& row : probs) raw.probs.push_back(string_list(row, "probs row"));
  return validate_model(raw);
}

ModelDataPair pair_from_json(const Json& j) {
  const Json& observed = field(j, "observed");
  if (!observed.is_string()) malformed("observed must be a sample label");
  return ModelDataPair(model_from_json(j), observed.get<std::string>());
}

Prior prior_from_json(const Json& j) {
  return Prior(string_list(field(j, "theta"), "theta"), rationals_from(field(j, "weights"), "weights"));
}

Partition partition_from_json(const Json& j, const std::vector<std::string>& sample_labels) {
  if (!j.is_array()) malformed("partition must be a list of blocks");
  std::vector<Partition::Block> blocks;
  for (const auto& b : j) {
    Partition::Block block;
    for (const auto& label : string_list(b, "partition block")) block.push_back(index_in(sample_labels, label));
    blocks.push_back(std::move(block));
  }
  return Partition::from_blocks(sample_labels.size(), std::move(blocks));
}

WitnessChain chain_from_json(const Json& j) {
  WitnessChain chain;
  const Json& nodes = field(j, "nodes");
  const Json& steps = field(j, "steps");
  if (!nodes.is_array() || !steps.is_array()) malformed("chain needs node and step lists");
  for (const auto& n : nodes) chain.nodes.push_back(pair_from_json(n));
  if (chain.nodes.size() != steps.size() + 1) malformed("chain needs one more node than steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Json& s = steps[i];
    const RelationKind kind = parse_relation_kind(field(s, "kind").get<std::string>());
    const std::string orientation = field(s, "orientation").get<std::string>();
    if (orientation != "forward" && orientation != "backward") malformed("orientation must be forward or backward");
    const bool forward = orientation == "forward";
    const ModelDataPair& a = forward ? chain.nodes[i] : chain.nodes[i + 1];
    const ModelDataPair& b = forward ? chain.nodes[i + 1] : chain.nodes[i];
    const Json& w = field(s, "witness");
    const std::string relation = field(w, "relation").get<std::string>();
    StepWitness witness = LWitness{Rational(0)};
    if (relation == "C") {
      const std::string parent_text = field(w, "parent").get<std::string>();
      if (parent_text != "first" && parent_text != "second") malformed("parent must be first or second");
      const Parent parent = parent_text == "first" ? Parent::First : Parent::Second;
      const ModelDataPair& p = parent == Parent::First ? a : b;
      const ModelDataPair& c = parent == Parent::First ? b : a;
      Partition ancillary = partition_from_json(field(w, "ancillary"), p.model().sample_labels());
      std::vector<std::string> conditional_labels;
      for (std::size_t x : ancillary.block_containing(p.observed())) {
        conditional_labels.push_back(p.model().sample_labels()[x]);
      }
      SampleBijection phi = bijection_from(field(w, "bijection"), conditional_labels, c.model().sample_labels());
      witness = CWitness{parent, std::move(ancillary), std::move(phi)};
    } else if (relation == "S") {
      ReductionResult r1 = reduction_from(field(w, "first_reduction"), a);
      ReductionResult r2 = reduction_from(field(w, "second_reduction"), b);
      SampleBijection phi = bijection_from(field(w, "bijection"), r1.reduced.model().sample_labels(),
                                           r2.reduced.model().sample_labels());
      witness = SWitness{std::move(r1), std::move(r2), std::move(phi)};
    } else if (relation == "L") {
      witness = LWitness{Rational::parse(field(w, "factor").get<std::string>())};
    } else {
      malformed("unknown witness relation '" + relation + "'");
    }
    chain.steps.push_back(ChainStep{kind, std::move(witness), forward ? Orientation::Forward : Orientation::Backward});
  }
  return chain;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string serialize(const FiniteModel& model) { return dump(to_json(model)); }
std::string serialize(const ModelDataPair& pair) { return dump(to_json(pair)); }
std::string serialize(const Prior& prior) { return dump(to_json(prior)); }

namespace {

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

FiniteModel parse_model(std::string_view text) {
  return guarded([&] { return model_from_json(parse(text)); });
}
ModelDataPair parse_pair(std::string_view text) {
  return guarded([&] { return pair_from_json(parse(text)); });
}
Prior parse_prior(std::string_view text) {
  return guarded([&] { return prior_from_json(parse(text)); });
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace lplab::io
