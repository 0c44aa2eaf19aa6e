#include "lplab/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lplab/error.hpp"

namespace lplab {

namespace {

void require_distinct(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, std::string("duplicate ") + what + " label '" + label + "'");
    }
  }
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label, const char* what) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::UnknownLabel, std::string("unknown ") + what + " label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace

FiniteModel::FiniteModel(std::vector<std::string> theta_labels, std::vector<std::string> sample_labels,
                         std::vector<RationalVector> probs)
    : theta_labels_(std::move(theta_labels)), sample_labels_(std::move(sample_labels)), rows_(std::move(probs)) {
  if (theta_labels_.empty() || sample_labels_.empty()) {
    throw Error(ErrorCode::EmptyModel, "parameter space and sample space must be nonempty");
  }
  if (rows_.size() != theta_labels_.size()) {
    throw Error(ErrorCode::ShapeMismatch, "expected one probability row per parameter value");
  }
  for (const auto& row : rows_) {
    if (row.size() != sample_labels_.size()) {
      throw Error(ErrorCode::ShapeMismatch, "expected one probability per sample point");
    }
  }
  require_distinct(theta_labels_, "parameter");
  require_distinct(sample_labels_, "sample");
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    for (std::size_t x = 0; x < rows_[t].size(); ++x) {
      if (rows_[t][x].sign() < 0) {
        throw Error(ErrorCode::NegativeEntry,
                    "f_" + theta_labels_[t] + "(" + sample_labels_[x] + ") = " + rows_[t][x].str());
      }
    }
    const Rational total = sum(rows_[t]);
    if (total != Rational(1)) {
      throw Error(ErrorCode::NonStochasticRow, "row " + theta_labels_[t] + " sums to " + total.str());
    }
  }
  columns_.assign(sample_labels_.size(), RationalVector(theta_labels_.size()));
  for (std::size_t x = 0; x < sample_labels_.size(); ++x) {
    bool reachable = false;
    for (std::size_t t = 0; t < theta_labels_.size(); ++t) {
      columns_[x][t] = rows_[t][x];
      reachable = reachable || rows_[t][x].is_positive();
    }
    if (!reachable) {
      throw Error(ErrorCode::UnreachablePoint, "sample point '" + sample_labels_[x] + "' has probability 0 under every parameter");
    }
  }
}

std::size_t FiniteModel::sample_index(const std::string& label) const {
  return index_of(sample_labels_, label, "sample");
}

std::size_t FiniteModel::theta_index(const std::string& label) const {
  return index_of(theta_labels_, label, "parameter");
}

FiniteModel validate_model(const RawModel& raw) {
  std::vector<RationalVector> probs;
  probs.reserve(raw.probs.size());
  for (const auto& raw_row : raw.probs) {
    RationalVector row;
    row.reserve(raw_row.size());
    for (const auto& text : raw_row) row.push_back(Rational::parse(text));
    probs.push_back(std::move(row));
  }
  return FiniteModel(raw.theta, raw.space, std::move(probs));
}

ModelDataPair::ModelDataPair(std::shared_ptr<const FiniteModel> model, std::size_t observed)
    : model_(std::move(model)), observed_(observed) {
  if (!model_) throw Error(ErrorCode::EmptyModel, "null model");
  if (observed_ >= model_->space_size()) {
    throw Error(ErrorCode::InvalidObservation, "observed index " + std::to_string(observed_) + " out of range");
  }
}

ModelDataPair::ModelDataPair(FiniteModel model, std::size_t observed)
    : ModelDataPair(std::make_shared<const FiniteModel>(std::move(model)), observed) {}

ModelDataPair::ModelDataPair(FiniteModel model, const std::string& observed_label)
    : ModelDataPair(std::make_shared<const FiniteModel>(std::move(model)), std::size_t{0}) {
  observed_ = model_->sample_index(observed_label);
}

RationalVector likelihood_vector(const ModelDataPair& pair) { return pair.model().column(pair.observed()); }

std::optional<Rational> proportional(const RationalVector& v1, const RationalVector& v2) {
  if (v1.size() != v2.size()) {
    throw Error(ErrorCode::LengthMismatch, "vectors of length " + std::to_string(v1.size()) + " and " +
                                               std::to_string(v2.size()));
  }
  std::optional<Rational> c;
  for (std::size_t i = 0; i < v1.size(); ++i) {
    if (v1[i].is_zero() != v2[i].is_zero()) return std::nullopt;
    if (v1[i].sign() < 0 || v2[i].sign() < 0) return std::nullopt;
    if (!c && !v2[i].is_zero()) c = v1[i] / v2[i];
  }
  if (!c) return Rational(1);
  // Cross-multiplication against the first nonzero coordinate.
  for (std::size_t i = 0; i < v1.size(); ++i) {
    if (v1[i] != *c * v2[i]) return std::nullopt;
  }
  return c;
}

void require_same_parameters(const ModelDataPair& p1, const ModelDataPair& p2) {
  if (p1.theta_labels() != p2.theta_labels()) {
    throw Error(ErrorCode::ParameterSpaceMismatch, "pairs have different parameter spaces");
  }
}

std::optional<SampleBijection> pairs_isomorphic(const ModelDataPair& p1, const ModelDataPair& p2) {
  const FiniteModel& m1 = p1.model();
  const FiniteModel& m2 = p2.model();
  if (m1.theta_labels() != m2.theta_labels() || m1.space_size() != m2.space_size()) return std::nullopt;
  if (m1.column(p1.observed()) != m2.column(p2.observed())) return std::nullopt;

  auto rest_sorted = [](const FiniteModel& m, std::size_t skip) {
    std::vector<std::size_t> idx;
    for (std::size_t x = 0; x < m.space_size(); ++x) {
      if (x != skip) idx.push_back(x);
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return m.column(a) < m.column(b); });
    return idx;
  };
  const auto rest1 = rest_sorted(m1, p1.observed());
  const auto rest2 = rest_sorted(m2, p2.observed());

  SampleBijection phi(m1.space_size());
  phi[p1.observed()] = p2.observed();
  for (std::size_t i = 0; i < rest1.size(); ++i) {
    if (m1.column(rest1[i]) != m2.column(rest2[i])) return std::nullopt;
    phi[rest1[i]] = rest2[i];
  }
  return phi;
}

std::vector<std::string> default_sample_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

std::vector<std::string> default_theta_labels(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("t" + std::to_string(i));
  return labels;
}

namespace {

FiniteModel permuted_columns(const FiniteModel& m, const std::vector<std::size_t>& order) {
  std::vector<RationalVector> rows(m.theta_size(), RationalVector(order.size()));
  for (std::size_t t = 0; t < m.theta_size(); ++t) {
    for (std::size_t i = 0; i < order.size(); ++i) rows[t][i] = m.prob(t, order[i]);
  }
  return FiniteModel(m.theta_labels(), default_sample_labels(order.size()), std::move(rows));
}

}  // namespace

ModelDataPair canonical_form(const ModelDataPair& pair) {
  const FiniteModel& m = pair.model();
  std::vector<std::size_t> order(m.space_size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t obs = pair.observed();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (m.column(a) != m.column(b)) return m.column(a) < m.column(b);
    return a == obs && b != obs;
  });
  const auto pos = static_cast<std::size_t>(std::find(order.begin(), order.end(), obs) - order.begin());
  return ModelDataPair(permuted_columns(m, order), pos);
}

FiniteModel canonical_model(const FiniteModel& model) {
  std::vector<std::size_t> order(model.space_size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return model.column(a) < model.column(b); });
  return permuted_columns(model, order);
}

}  // namespace lplab
