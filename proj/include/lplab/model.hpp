#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lplab/rational.hpp"

namespace lplab {

/// Unvalidated model description as read from text: probabilities are still
/// strings in "p/q" form.
struct RawModel {
  std::vector<std::string> theta;
  std::vector<std::string> space;
  std::vector<std::vector<std::string>> probs;
};

/// A finite family {f_theta : theta in Theta} of distributions on a finite
/// sample space. Immutable; every instance satisfies:
///  - |Theta| >= 1, |X| >= 1, labels distinct within each list;
///  - every entry >= 0 and every row sums to exactly 1;
///  - every sample point has positive probability under some theta.
class FiniteModel {
 public:
  FiniteModel(std::vector<std::string> theta_labels, std::vector<std::string> sample_labels,
              std::vector<RationalVector> probs);

  const std::vector<std::string>& theta_labels() const { return theta_labels_; }
  const std::vector<std::string>& sample_labels() const { return sample_labels_; }
  const std::vector<RationalVector>& probs() const { return rows_; }

  std::size_t theta_size() const { return theta_labels_.size(); }
  std::size_t space_size() const { return sample_labels_.size(); }

  const Rational& prob(std::size_t theta, std::size_t x) const { return rows_[theta][x]; }
  const RationalVector& row(std::size_t theta) const { return rows_[theta]; }
  /// (f_theta(x))_theta, in theta_labels order.
  const RationalVector& column(std::size_t x) const { return columns_[x]; }

  /// Throws Error(UnknownLabel).
  std::size_t sample_index(const std::string& label) const;
  std::size_t theta_index(const std::string& label) const;

  friend bool operator==(const FiniteModel& a, const FiniteModel& b) {
    return a.theta_labels_ == b.theta_labels_ && a.sample_labels_ == b.sample_labels_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> theta_labels_;
  std::vector<std::string> sample_labels_;
  std::vector<RationalVector> rows_;
  std::vector<RationalVector> columns_;
};

/// Parses every entry and validates. Errors: ParseError, ShapeMismatch,
/// EmptyModel, DuplicateLabel, NegativeEntry, NonStochasticRow,
/// UnreachablePoint.
FiniteModel validate_model(const RawModel& raw);

/// A model together with an observed sample point (M, x).
class ModelDataPair {
 public:
  ModelDataPair(FiniteModel model, std::size_t observed);
  ModelDataPair(std::shared_ptr<const FiniteModel> model, std::size_t observed);
  ModelDataPair(FiniteModel model, const std::string& observed_label);

  const FiniteModel& model() const { return *model_; }
  const std::shared_ptr<const FiniteModel>& shared_model() const { return model_; }
  std::size_t observed() const { return observed_; }
  const std::string& observed_label() const { return model_->sample_labels()[observed_]; }
  const std::vector<std::string>& theta_labels() const { return model_->theta_labels(); }

  friend bool operator==(const ModelDataPair& a, const ModelDataPair& b) {
    return a.observed_ == b.observed_ && (a.model_ == b.model_ || *a.model_ == *b.model_);
  }

 private:
  std::shared_ptr<const FiniteModel> model_;
  std::size_t observed_;
};

/// theta -> f_theta(x_obs), in theta_labels order.
RationalVector likelihood_vector(const ModelDataPair& pair);

/// c > 0 with v1 = c * v2, if one exists. Zero patterns must match. Two
/// all-zero vectors are proportional with c = 1. Throws Error(LengthMismatch).
std::optional<Rational> proportional(const RationalVector& v1, const RationalVector& v2);

/// phi[x] = image in the second sample space of point x of the first.
using SampleBijection = std::vector<std::size_t>;

/// A bijection phi with f1_theta(x) = f2_theta(phi(x)) for all theta, x and
/// phi(obs1) = obs2, if one exists. Parameter labels must be identical and in
/// the same order.
std::optional<SampleBijection> pairs_isomorphic(const ModelDataPair& p1, const ModelDataPair& p2);

/// Columns sorted lexicographically by probability vector, with sample points
/// relabelled x1..xn. Among equal columns the observed point goes first.
/// Equal for exactly the pairs that are isomorphic.
ModelDataPair canonical_form(const ModelDataPair& pair);

/// Column-sorted, relabelled representative of a model (no observation).
FiniteModel canonical_model(const FiniteModel& model);

/// "x1".."xn".
std::vector<std::string> default_sample_labels(std::size_t n);
/// "t1".."tk".
std::vector<std::string> default_theta_labels(std::size_t k);

/// Throws Error(ParameterSpaceMismatch) unless both pairs share identical
/// ordered parameter labels.
void require_same_parameters(const ModelDataPair& p1, const ModelDataPair& p2);

}  // namespace lplab
