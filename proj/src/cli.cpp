#include "lplab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lplab/ancillarity.hpp"
#include "lplab/closure.hpp"
#include "lplab/constructions.hpp"
#include "lplab/error.hpp"
#include "lplab/evidence.hpp"
#include "lplab/io.hpp"
#include "lplab/search.hpp"
#include "lplab/sufficiency.hpp"

namespace lplab::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Outcome {
  int code = kOk;
  Json report;
};

std::size_t resolve_max_space(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LP_LAB_MAX_SPACE")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("LP_LAB_MAX_SPACE is not a number: '") + env + "'");
    }
  }
  return kDefaultMaxSpace;
}

Json load(const std::string& path) { return io::parse(io::read_file(path)); }
ModelDataPair load_pair(const std::string& path) { return io::pair_from_json(load(path)); }
Prior load_prior(const std::string& path) { return io::prior_from_json(load(path)); }

Json report(const std::string& command, Json inputs, Json result) {
  return Json{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

Json labels_of(const std::vector<std::size_t>& indices, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(labels[i]);
  return out;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += ch;
    }
  }
  return out;
}

bool is_fraction(const std::string& s) {
  if (s.find('/') == std::string::npos) return false;
  try {
    Rational::parse(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void collect_fractions(const Json& j, std::vector<std::string>& out) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (is_fraction(s)) out.push_back(s);
  } else if (j.is_structured()) {
    for (const auto& e : j) collect_fractions(e, out);
  }
}

Json decimal_annotations(const Json& j, int digits) {
  std::vector<std::string> fractions;
  collect_fractions(j, fractions);
  std::sort(fractions.begin(), fractions.end());
  fractions.erase(std::unique(fractions.begin(), fractions.end()), fractions.end());
  Json out = Json::object();
  for (const auto& f : fractions) out[f] = Rational::parse(f).decimal(digits);
  return out;
}

// ---------------------------------------------------------------- commands

Outcome cmd_validate(const std::string& path) {
  const Json j = load(path);
  Json result;
  if (j.contains("weights")) {
    result = Json{{"kind", "prior"}, {"valid", true}, {"value", io::to_json(io::prior_from_json(j))}};
  } else if (j.contains("observed")) {
    result = Json{{"kind", "pair"}, {"valid", true}, {"value", io::to_json(io::pair_from_json(j))}};
  } else {
    result = Json{{"kind", "model"}, {"valid", true}, {"value", io::to_json(io::model_from_json(j))}};
  }
  return {kOk, report("validate", Json{{"file", fs::path(path).filename().string()}}, std::move(result))};
}

Outcome cmd_reduce(const std::string& path) {
  const ModelDataPair pair = load_pair(path);
  const ReductionResult r = reduce_to_mss(pair);
  return {kOk, report("reduce", Json{{"pair", io::to_json(pair)}}, io::to_json(r, pair))};
}

Outcome cmd_relate(const std::string& kind_text, const std::string& a_path, const std::string& b_path) {
  const RelationKind kind = parse_relation_kind(kind_text);
  const ModelDataPair a = load_pair(a_path);
  const ModelDataPair b = load_pair(b_path);
  const auto witness = relate(kind, a, b);
  Json result{{"kind", to_string(kind)}, {"holds", witness.has_value()}};
  result["witness"] = witness ? io::to_json(*witness, a, b) : Json(nullptr);
  return {witness ? kOk : kNegative,
          report("relate", Json{{"first", io::to_json(a)}, {"second", io::to_json(b)}}, std::move(result))};
}

Outcome cmd_ancillaries(const std::string& path, bool maximal, bool laminal, std::size_t max_space) {
  const Json j = load(path);
  const FiniteModel model = j.contains("observed") ? io::pair_from_json(j).model() : io::model_from_json(j);
  const auto& labels = model.sample_labels();
  Json result = Json::object();
  const std::vector<Partition> all = enumerate_ancillaries(model, max_space);
  Json all_json = Json::array();
  for (const auto& a : all) all_json.push_back(io::to_json(a, labels));
  result["all"] = std::move(all_json);
  int code = kOk;
  if (maximal || laminal) {
    const auto max_list = maximal_ancillaries(model, max_space);
    if (maximal) {
      Json m = Json::array();
      for (const auto& a : max_list) m.push_back(io::to_json(a, labels));
      result["maximal"] = std::move(m);
    }
    if (laminal) {
      try {
        result["laminal"] = io::to_json(laminal_ancillary(model, max_space), labels);
      } catch (const NotUniqueError& e) {
        Json antichain = Json::array();
        for (const auto& a : e.antichain()) antichain.push_back(io::to_json(a, labels));
        result["laminal"] = nullptr;
        result["laminal_antichain"] = std::move(antichain);
        code = kNegative;
      }
    }
  }
  return {code, report("ancillaries", Json{{"model", io::to_json(model)}, {"max_space", max_space}}, std::move(result))};
}

Outcome cmd_birnbaumize(const std::string& a_path, const std::string& b_path, const std::string& out_dir) {
  const ModelDataPair a = load_pair(a_path);
  const ModelDataPair b = load_pair(b_path);
  const BirnbaumMixture mix = birnbaumize(a, b);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    io::write_file(fs::path(out_dir) / "mixture.model", io::serialize(*mix.mixture));
    io::write_file(fs::path(out_dir) / "mixture_first.pair", io::serialize(mix.first));
    io::write_file(fs::path(out_dir) / "mixture_second.pair", io::serialize(mix.second));
  }
  const auto& labels = mix.mixture->sample_labels();
  Json result{{"mixture", io::to_json(*mix.mixture)},
              {"first", io::to_json(mix.first)},
              {"second", io::to_json(mix.second)},
              {"indicator", io::to_json(mix.indicator, labels)},
              {"indicator_masses", Json::array()}};
  for (const auto& w : ancillary_block_masses(*mix.mixture, mix.indicator)) result["indicator_masses"].push_back(w.str());
  return {kOk, report("birnbaumize", Json{{"first", io::to_json(a)}, {"second", io::to_json(b)}}, std::move(result))};
}

Outcome cmd_efm(const std::string& a_path, const std::string& b_path) {
  const ModelDataPair a = load_pair(a_path);
  const ModelDataPair b = load_pair(b_path);
  Json inputs{{"first", io::to_json(a)}, {"second", io::to_json(b)}};
  if (!l_related(a, b)) {
    return {kNegative, report("efm", std::move(inputs), Json{{"l_related", false}})};
  }
  const EfmParent efm = efm_parent(a, b);
  const auto& labels = efm.parent.model().sample_labels();
  Json swap = Json::array();
  for (std::size_t x = 0; x < efm.swap.size(); ++x) {
    if (efm.swap[x] != x) swap.push_back(Json::array({labels[x], labels[efm.swap[x]]}));
  }
  Json result{{"l_related", true},
              {"factor", efm.factor.str()},
              {"parent", io::to_json(efm.parent)},
              {"first_ancillary", io::to_json(efm.first_ancillary, labels)},
              {"second_ancillary", io::to_json(efm.second_ancillary, labels)},
              {"swap", std::move(swap)},
              {"chain", io::to_json(efm.chain)},
              {"verified", verify_chain(efm.chain)}};
  return {kOk, report("efm", std::move(inputs), std::move(result))};
}

Outcome cmd_chain(const std::string& kind_text, const std::string& a_path, const std::string& b_path) {
  const ModelDataPair a = load_pair(a_path);
  const ModelDataPair b = load_pair(b_path);
  const RelationKind kind = parse_relation_kind(kind_text);
  if (kind != RelationKind::SOrC && kind != RelationKind::C) {
    throw Error(ErrorCode::ParseError, "chain --kind must be SC or C");
  }
  Json inputs{{"kind", to_string(kind)}, {"first", io::to_json(a)}, {"second", io::to_json(b)}};
  if (!l_related(a, b)) {
    return {kNegative, report("chain", std::move(inputs), Json{{"l_related", false}, {"chain", nullptr}})};
  }
  const WitnessChain chain = kind == RelationKind::SOrC ? birnbaum_chain(a, b) : efm_parent(a, b).chain;
  Json result{{"l_related", true}, {"chain", io::to_json(chain)}, {"verified", verify_chain(chain)}};
  return {kOk, report("chain", std::move(inputs), std::move(result))};
}

Outcome cmd_closure(const std::string& dir, const std::string& kind_text, const std::string& augment) {
  const RelationKind kind = parse_relation_kind(kind_text);
  if (!fs::is_directory(dir)) throw Error(ErrorCode::ParseError, "not a directory: '" + dir + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pair") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  Universe universe;
  std::vector<std::vector<std::string>> sources;
  auto add = [&](const ModelDataPair& p, const std::string& source) {
    const std::size_t i = universe.insert(p);
    if (sources.size() <= i) sources.resize(i + 1);
    sources[i].push_back(source);
  };
  for (const auto& f : files) add(load_pair(f.string()), f.filename().string());

  if (!augment.empty()) {
    if (augment != "birnbaum" && augment != "efm") throw Error(ErrorCode::ParseError, "--augment must be birnbaum or efm");
    const std::size_t original = universe.size();
    for (std::size_t i = 0; i < original; ++i) {
      for (std::size_t j = i + 1; j < original; ++j) {
        const ModelDataPair a = universe[i];
        const ModelDataPair b = universe[j];
        if (!l_related(a, b)) continue;
        const std::string tag = "#" + std::to_string(i) + "," + std::to_string(j);
        if (augment == "birnbaum") {
          const BirnbaumMixture mix = birnbaumize(a, b);
          add(mix.first, "birnbaum(1)" + tag);
          add(mix.second, "birnbaum(2)" + tag);
        } else {
          add(efm_parent(a, b).parent, "efm" + tag);
        }
      }
    }
  }

  const ClosureResult result = closure(universe, kind);
  Json members = Json::array();
  for (std::size_t i = 0; i < universe.size(); ++i) {
    members.push_back(Json{{"index", i}, {"sources", sources[i]}, {"pair", io::to_json(universe[i])}});
  }
  Json classes = Json::array();
  bool all_verified = true;
  for (const auto& cls : result.classes()) {
    Json chains = Json::array();
    for (std::size_t k = 1; k < cls.size(); ++k) {
      const auto chain = result.chain(cls.front(), cls[k]);
      const bool ok = chain && verify_chain(*chain);
      all_verified = all_verified && ok;
      chains.push_back(Json{{"from", cls.front()}, {"to", cls[k]}, {"verified", ok}, {"chain", io::to_json(*chain)}});
    }
    classes.push_back(Json{{"members", cls}, {"chains", std::move(chains)}});
  }
  Json out{{"kind", to_string(kind)},
           {"universe_size", universe.size()},
           {"class_count", result.classes().size()},
           {"members", std::move(members)},
           {"classes", std::move(classes)},
           {"chains_verified", all_verified}};
  return {kOk, report("closure", Json{{"files", files.size()}, {"augment", augment}}, std::move(out))};
}

Json bounds_json(const SearchBounds& b) {
  return Json{{"theta_size", b.grid.theta_size},
              {"max_space", b.grid.max_space},
              {"max_denominator", b.grid.max_denominator},
              {"enumeration_bound", b.max_space}};
}

Outcome cmd_search(const std::string& what, const SearchBounds& bounds) {
  if (what == "c-transitivity") {
    const CTransitivitySearch s = search_c_transitivity_counterexample(bounds);
    Json result{{"status", to_string(s.status)}, {"models_scanned", s.models_scanned}};
    if (s.triple) {
      const auto& t = *s.triple;
      result["first"] = io::to_json(t.first);
      result["middle"] = io::to_json(t.middle);
      result["last"] = io::to_json(t.last);
      result["first_middle"] = io::to_json(t.first_middle, t.first, t.middle);
      result["middle_last"] = io::to_json(t.middle_last, t.middle, t.last);
      result["verified"] = verify_c_transitivity_counterexample(t, bounds.max_space);
    }
    return {s.triple ? kOk : kNegative, report("search c-transitivity", bounds_json(bounds), std::move(result))};
  }
  if (what == "l-minus-sc") {
    const LMinusScSearch s = search_l_minus_sc(bounds);
    Json result{{"status", to_string(s.status)}, {"pairs_scanned", s.pairs_scanned}};
    if (s.witness) {
      result["first"] = io::to_json(s.witness->first);
      result["second"] = io::to_json(s.witness->second);
      result["factor"] = s.witness->factor.str();
      result["verified"] = check_l_minus_sc(s.witness->first, s.witness->second, bounds.max_space).qualifies();
    }
    return {s.witness ? kOk : kNegative, report("search l-minus-sc", bounds_json(bounds), std::move(result))};
  }
  throw Error(ErrorCode::ParseError, "unknown search '" + what + "' (expected c-transitivity or l-minus-sc)");
}

Outcome cmd_rb(const std::string& what, const std::string& pair_path, const std::string& prior_path,
               const std::string& hypothesis, const std::string& theta) {
  const ModelDataPair pair = load_pair(pair_path);
  const Prior prior = load_prior(prior_path);
  const auto& theta_labels = pair.theta_labels();
  Json inputs{{"pair", io::to_json(pair)}, {"prior", io::to_json(prior)}};
  if (what == "analyze") {
    std::vector<Hypothesis> extra;
    if (!hypothesis.empty()) extra.push_back(hypothesis_from_labels(theta_labels, split_labels(hypothesis)));
    return {kOk, report("rb analyze", std::move(inputs), io::to_json(analyze_evidence(pair, prior, extra), theta_labels))};
  }
  if (what == "estimate") {
    Json result{{"relative_belief", Json::array()}, {"estimate", labels_of(rb_estimate(pair, prior), theta_labels)}};
    for (const auto& v : relative_belief(pair, prior)) result["relative_belief"].push_back(v.str());
    return {kOk, report("rb estimate", std::move(inputs), std::move(result))};
  }
  if (what == "strength") {
    if (theta.empty()) throw Error(ErrorCode::UnknownTheta, "rb strength needs --theta <label>");
    const Hypothesis h = hypothesis_from_labels(theta_labels, {theta});
    Json result{{"theta", theta}, {"strength", rb_strength(pair, prior, h.front()).str()}};
    return {kOk, report("rb strength", std::move(inputs), std::move(result))};
  }
  throw Error(ErrorCode::ParseError, "unknown rb mode '" + what + "' (expected analyze, estimate or strength)");
}

Outcome cmd_check(const std::string& what, const std::string& pair_path, const std::string& prior_path,
                  const std::string& ancillary) {
  const ModelDataPair pair = load_pair(pair_path);
  if (what == "model") {
    Json inputs{{"pair", io::to_json(pair)}};
    Json result;
    if (ancillary.empty()) {
      result = Json{{"statistic", "minimal_sufficient"}, {"p_value", check_model_mss(pair).str()}};
    } else {
      const Partition a = parse_partition(ancillary, pair.model().sample_labels());
      inputs["ancillary"] = io::to_json(a, pair.model().sample_labels());
      result = Json{{"statistic", "ancillary"}, {"p_value", check_model_ancillary(pair, a).str()}};
    }
    return {kOk, report("check model", std::move(inputs), std::move(result))};
  }
  if (what == "prior") {
    if (prior_path.empty()) throw Error(ErrorCode::InvalidPrior, "check prior needs --prior <file>");
    const Prior prior = load_prior(prior_path);
    Json inputs{{"pair", io::to_json(pair)}, {"prior", io::to_json(prior)}};
    return {kOk, report("check prior", std::move(inputs), Json{{"p_value", check_prior_conflict(pair, prior).str()}})};
  }
  throw Error(ErrorCode::ParseError, "unknown check '" + what + "' (expected model or prior)");
}

// ---------------------------------------------------------------- rendering

void render(const Json& j, const std::string& indent, int decimals, std::ostream& os);

std::string scalar(const Json& j, int decimals) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (decimals >= 0 && is_fraction(s)) return s + " (" + Rational::parse(s).decimal(decimals) + ")";
    return s;
  }
  return j.dump();
}

bool flat(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) {
           return !e.is_structured() ||
                  (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return !x.is_structured(); }));
         });
}

std::string inline_list(const Json& j, int decimals) {
  std::string out = "[";
  bool first = true;
  for (const auto& e : j) {
    if (!first) out += ", ";
    first = false;
    out += e.is_array() ? inline_list(e, decimals) : scalar(e, decimals);
  }
  return out + "]";
}

void render(const Json& j, const std::string& indent, int decimals, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !flat(value))) {
        os << indent << key << ":\n";
        render(value, indent + "  ", decimals, os);
      } else {
        os << indent << key << ": " << (value.is_array() ? inline_list(value, decimals) : scalar(value, decimals))
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured() && !flat(e)) {
        os << indent << "-\n";
        render(e, indent + "  ", decimals, os);
      } else {
        os << indent << "- " << (e.is_array() ? inline_list(e, decimals) : scalar(e, decimals)) << "\n";
      }
    }
  } else {
    os << indent << scalar(j, decimals) << "\n";
  }
}

}  // namespace

std::string render_human(const std::string& json_text, int decimals) {
  std::ostringstream os;
  render(io::parse(json_text), "", decimals, os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lp-lab: exact finite-model analysis of sufficiency, conditionality and likelihood"};
  app.name("lp-lab");
  app.require_subcommand(1);

  bool machine = false;
  int decimals = -1;
  std::optional<std::size_t> max_space_flag;
  app.add_flag("--machine", machine, "Emit the structured (JSON) report");
  app.add_option("--decimal", decimals, "Annotate fractions with k-digit decimals")->check(CLI::NonNegativeNumber);
  app.add_option("--max-space", max_space_flag, "Ancillary enumeration bound (default 12, env LP_LAB_MAX_SPACE)");

  std::function<Outcome()> action;
  std::string a, b, kind, mode, prior, hypothesis, theta, ancillary, dir, augment, out_dir;
  bool maximal = false;
  bool laminal = false;
  SearchBounds bounds;
  std::size_t max_space = kDefaultMaxSpace;

  auto* validate = app.add_subcommand("validate", "Validate a .model, .pair or .prior file");
  validate->add_option("file", a)->required();
  validate->callback([&] { action = [&] { return cmd_validate(a); }; });

  auto* reduce = app.add_subcommand("reduce", "Minimal sufficient reduction of a pair");
  reduce->add_option("pair", a)->required();
  reduce->callback([&] { action = [&] { return cmd_reduce(a); }; });

  auto* rel = app.add_subcommand("relate", "Decide a one-step relation between two pairs");
  rel->add_option("--kind", kind, "S, C, L, SC or DURBIN")->required();
  rel->add_option("first", a)->required();
  rel->add_option("second", b)->required();
  rel->callback([&] { action = [&] { return cmd_relate(kind, a, b); }; });

  auto* anc = app.add_subcommand("ancillaries", "Enumerate ancillary partitions");
  anc->add_option("file", a)->required();
  anc->add_flag("--maximal", maximal);
  anc->add_flag("--laminal", laminal);
  anc->callback([&] { action = [&] { return cmd_ancillaries(a, maximal, laminal, max_space); }; });

  auto* birn = app.add_subcommand("birnbaumize", "Equal-weight mixture of two pairs");
  birn->add_option("first", a)->required();
  birn->add_option("second", b)->required();
  birn->add_option("--out-dir", out_dir, "Also write the mixture and embedded pairs here");
  birn->callback([&] { action = [&] { return cmd_birnbaumize(a, b, out_dir); }; });

  auto* efm = app.add_subcommand("efm", "Unequal-weight parent with two conditioning ancillaries");
  efm->add_option("first", a)->required();
  efm->add_option("second", b)->required();
  efm->callback([&] { action = [&] { return cmd_efm(a, b); }; });

  auto* chn = app.add_subcommand("chain", "Emit a verified witness chain between L-related pairs");
  chn->add_option("--kind", kind, "SC (mixture chain) or C (conditionality-only chain)")->required();
  chn->add_option("first", a)->required();
  chn->add_option("second", b)->required();
  chn->callback([&] { action = [&] { return cmd_chain(kind, a, b); }; });

  auto* clo = app.add_subcommand("closure", "Equivalence classes of a relation over a directory of .pair files");
  clo->add_option("--dir", dir)->required();
  clo->add_option("--kind", kind, "S, C, L, SC or DURBIN")->default_val("SC");
  clo->add_option("--augment", augment, "birnbaum or efm");
  clo->callback([&] { action = [&] { return cmd_closure(dir, kind, augment); }; });

  auto* srch = app.add_subcommand("search", "Bounded counterexample searches");
  srch->add_option("what", mode, "c-transitivity or l-minus-sc")->required();
  srch->add_option("--theta-size", bounds.grid.theta_size)->default_val(2);
  srch->add_option("--max-model-space", bounds.grid.max_space, "Largest sample space searched")->default_val(6);
  srch->add_option("--max-denominator", bounds.grid.max_denominator)->default_val(6);
  srch->add_option("--workers", bounds.workers)->default_val(1);
  srch->callback([&] {
    action = [&] {
      bounds.max_space = max_space;
      return cmd_search(mode, bounds);
    };
  });

  auto* rb = app.add_subcommand("rb", "Relative belief inference");
  rb->add_option("mode", mode, "analyze, estimate or strength")->required();
  rb->add_option("pair", a)->required();
  rb->add_option("--prior", prior)->required();
  rb->add_option("--hypothesis", hypothesis, "Comma-separated parameter labels");
  rb->add_option("--theta", theta, "Parameter label for strength");
  rb->callback([&] { action = [&] { return cmd_rb(mode, a, prior, hypothesis, theta); }; });

  auto* chk = app.add_subcommand("check", "Model checking and prior-data conflict");
  chk->add_option("what", mode, "model or prior")->required();
  chk->add_option("pair", a)->required();
  chk->add_option("--prior", prior);
  chk->add_option("--ancillary", ancillary, "Ancillary partition, e.g. \"x1 x2|x3\"");
  chk->callback([&] { action = [&] { return cmd_check(mode, a, prior, ancillary); }; });

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  std::vector<std::string> argv_storage{"lp-lab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    max_space = resolve_max_space(max_space_flag);
    Outcome outcome = action();
    if (machine) {
      if (decimals >= 0) outcome.report["decimals"] = decimal_annotations(outcome.report, decimals);
      out << io::dump(outcome.report);
    } else {
      std::ostringstream os;
      render(outcome.report, "", decimals, os);
      out << os.str();
    }
    return outcome.code;
  } catch (const Error& e) {
    err << "lp-lab: " << e.what() << "\n";
    return e.code() == ErrorCode::NotLRelated ? kNegative : kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "lp-lab: ParseError: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "lp-lab: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace lplab::cli
