#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "lplab/closure.hpp"
#include "lplab/constructions.hpp"
#include "lplab/evidence.hpp"
#include "lplab/relations.hpp"
#include "lplab/search.hpp"

namespace lplab::io {

/// Keys keep insertion order so serialized text is stable.
using Json = nlohmann::ordered_json;

Json to_json(const FiniteModel& model);
Json to_json(const ModelDataPair& pair);
Json to_json(const Prior& prior);
/// Blocks as lists of sample labels.
Json to_json(const Partition& partition, const std::vector<std::string>& sample_labels);
Json to_json(const CWitness& witness, const ModelDataPair& a, const ModelDataPair& b);
Json to_json(const SWitness& witness, const ModelDataPair& a, const ModelDataPair& b);
Json to_json(const StepWitness& witness, const ModelDataPair& a, const ModelDataPair& b);
Json to_json(const WitnessChain& chain);
Json to_json(const ReductionResult& reduction, const ModelDataPair& source);
Json to_json(const BayesFactor& bf);
Json to_json(const EvidenceReport& report, const std::vector<std::string>& theta_labels);
Json to_json(const RelationPropertiesReport& report);

/// Errors: ParseError for malformed structure, then the model validation
/// errors.
FiniteModel model_from_json(const Json& j);
ModelDataPair pair_from_json(const Json& j);
Prior prior_from_json(const Json& j);
Partition partition_from_json(const Json& j, const std::vector<std::string>& sample_labels);
WitnessChain chain_from_json(const Json& j);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);
Json parse(std::string_view text);

std::string serialize(const FiniteModel& model);
std::string serialize(const ModelDataPair& pair);
std::string serialize(const Prior& prior);

FiniteModel parse_model(std::string_view text);
ModelDataPair parse_pair(std::string_view text);
Prior parse_prior(std::string_view text);

/// Throws Error(ParseError) if the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace lplab::io
