#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "lplab/relations.hpp"

namespace lplab {

/// Models with entries on {k/d : 0 <= k <= d, d <= max_denominator}.
struct ModelGrid {
  std::size_t theta_size = 2;
  std::size_t min_space = 1;
  std::size_t max_space = 3;
  std::size_t max_denominator = 4;
};

/// Every valid model on the grid, one per column-permutation class (columns
/// sorted, labels t1.., x1..). Order: sample-space size, then the largest
/// entry denominator, then the row-major matrix lexicographically. The
/// visitor returns false to stop.
void for_each_model(const ModelGrid& grid, const std::function<bool(const FiniteModel&)>& visit);

std::vector<FiniteModel> enumerate_models(const ModelGrid& grid);

/// Every model-data pair on the grid, one per isomorphism class, already in
/// canonical form; follows the model order, then observed index.
std::vector<ModelDataPair> enumerate_pairs(const ModelGrid& grid);

struct SearchBounds {
  ModelGrid grid{2, 1, 6, 6};
  /// bound for the exhaustive ancillary enumeration that certifies negatives
  std::size_t max_space = kDefaultMaxSpace;
  /// worker threads; never affects the reported result
  std::size_t workers = 1;
};

enum class SearchStatus { Found, Exhausted, Unknown };

std::string_view to_string(SearchStatus status);

/// c_related(first, middle) and c_related(middle, last) hold, c_related(first,
/// last) does not (the negative certified by exhaustive enumeration).
struct CTransitivityCounterexample {
  ModelDataPair first;
  ModelDataPair middle;
  ModelDataPair last;
  CWitness first_middle;
  CWitness middle_last;
};

struct CTransitivitySearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<CTransitivityCounterexample> triple;
  std::size_t models_scanned = 0;
};

/// Scans grid models in order; for each observed point collects the distinct
/// conditionals given ancillaries and looks for two that are not C-related.
CTransitivitySearch search_c_transitivity_counterexample(const SearchBounds& bounds);

/// Re-runs all three oracle calls, the negative both ways (fast and exhaustive).
bool verify_c_transitivity_counterexample(const CTransitivityCounterexample& triple,
                                          std::size_t max_space = kDefaultMaxSpace);

/// Verdict for a candidate member of L \ (S u C).
struct LMinusScVerdict {
  std::optional<Rational> factor;
  bool s_absent = false;
  bool c_absent = false;
  /// c_absent is certified by exhaustive ancillary enumeration of both models
  bool certified = false;

  bool qualifies() const { return factor.has_value() && s_absent && c_absent && certified; }
};

LMinusScVerdict check_l_minus_sc(const ModelDataPair& p1, const ModelDataPair& p2,
                                 std::size_t max_space = kDefaultMaxSpace);

struct LMinusScWitness {
  ModelDataPair first;
  ModelDataPair second;
  Rational factor;
};

struct LMinusScSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<LMinusScWitness> witness;
  std::size_t pairs_scanned = 0;
};

/// First (in pair-enumeration order of the later member) pair of grid pairs
/// that is L-related but neither S- nor C-related.
LMinusScSearch search_l_minus_sc(const SearchBounds& bounds);

}  // namespace lplab
