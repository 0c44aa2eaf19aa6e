#include "lplab/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "lplab/error.hpp"

namespace lplab {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Unknown: return "unknown";
  }
  return "?";
}

namespace {

RationalVector grid_values(std::size_t max_denominator) {
  std::set<Rational> values;
  for (std::size_t d = 1; d <= max_denominator; ++d) {
    for (std::size_t k = 0; k <= d; ++k) values.insert(Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(d)));
  }
  return {values.begin(), values.end()};
}

// Rows of length n with entries from `values` (sorted) summing to exactly 1,
// in lexicographic order.
std::vector<RationalVector> stochastic_rows(std::size_t n, const RationalVector& values) {
  std::vector<RationalVector> out;
  RationalVector row;
  const std::set<Rational> lookup(values.begin(), values.end());
  std::function<void(const Rational&)> extend = [&](const Rational& remaining) {
    if (row.size() + 1 == n) {
      if (lookup.count(remaining) != 0) {
        row.push_back(remaining);
        out.push_back(row);
        row.pop_back();
      }
      return;
    }
    for (const auto& v : values) {
      if (v > remaining) break;
      row.push_back(v);
      extend(remaining - v);
      row.pop_back();
    }
  };
  extend(Rational(1));
  return out;
}

bool columns_sorted(const std::vector<const RationalVector*>& rows, std::size_t n) {
  for (std::size_t x = 0; x + 1 < n; ++x) {
    for (const RationalVector* r : rows) {
      if ((*r)[x] < (*r)[x + 1]) break;
      if ((*r)[x] > (*r)[x + 1]) return false;
    }
  }
  return true;
}

bool all_columns_reachable(const std::vector<const RationalVector*>& rows, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    if (std::all_of(rows.begin(), rows.end(), [x](const RationalVector* r) { return (*r)[x].is_zero(); })) return false;
  }
  return true;
}

// Runs `fn` over a block of items on `workers` threads and returns the
// lowest-index hit. Workers skip items past the best hit seen so far; the
// answer is the same for every worker count.
template <typename Item, typename Result, typename Fn>
std::optional<std::pair<std::size_t, Result>> first_hit(const std::vector<Item>& items, std::size_t workers, Fn fn) {
  std::vector<std::optional<Result>> results(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{items.size()};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        if (i > best.load()) continue;
        results[i] = fn(items[i]);
        if (results[i]) {
          std::size_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
        }
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, items.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (results[i]) return std::make_pair(i, std::move(*results[i]));
  }
  return std::nullopt;
}

// Observed points that represent distinct isomorphism classes of pairs on a
// column-sorted model: the first of each run of equal columns.
std::vector<std::size_t> observation_representatives(const FiniteModel& m) {
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < m.space_size(); ++x) {
    if (x == 0 || m.column(x) != m.column(x - 1)) reps.push_back(x);
  }
  return reps;
}

struct ModelOutcome {
  std::optional<CTransitivityCounterexample> triple;
  bool unknown = false;
};

ModelOutcome scan_model_for_triple(const FiniteModel& model, std::size_t max_space) {
  ModelOutcome outcome;
  if (model.space_size() > max_space) {
    outcome.unknown = true;
    return outcome;
  }
  const auto shared = std::make_shared<const FiniteModel>(model);
  const auto ancillaries = enumerate_ancillaries(model, max_space);
  for (std::size_t x : observation_representatives(model)) {
    const ModelDataPair middle(shared, x);
    std::vector<ModelDataPair> conditionals;
    std::set<Partition::Block> seen_blocks;
    for (const auto& a : ancillaries) {
      const auto& block = a.block_containing(x);
      if (!seen_blocks.insert(block).second) continue;
      std::vector<std::size_t> labels(model.space_size(), 1);
      for (std::size_t y : block) labels[y] = 0;
      ModelDataPair q = condition_on_block(middle, Partition::from_labels(labels));
      const bool duplicate = std::any_of(conditionals.begin(), conditionals.end(), [&](const ModelDataPair& r) {
        return pairs_isomorphic(r, q).has_value();
      });
      if (!duplicate) conditionals.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < conditionals.size(); ++i) {
      for (std::size_t j = i + 1; j < conditionals.size(); ++j) {
        if (c_related(conditionals[i], conditionals[j])) continue;
        if (c_related_exhaustive(conditionals[i], conditionals[j], max_space)) {
          throw Error(ErrorCode::InvariantViolation, "conditionality oracles disagree");
        }
        auto first_middle = c_related(conditionals[i], middle);
        auto middle_last = c_related(middle, conditionals[j]);
        if (!first_middle || !middle_last) {
          throw Error(ErrorCode::InvariantViolation, "conditional is not C-related to its parent");
        }
        outcome.triple = CTransitivityCounterexample{conditionals[i], middle, conditionals[j],
                                                     std::move(*first_middle), std::move(*middle_last)};
        return outcome;
      }
    }
  }
  return outcome;
}

std::string direction_key(const RationalVector& v) {
  std::optional<Rational> scale;
  std::string key;
  for (const auto& e : v) {
    if (!scale && !e.is_zero()) scale = e;
    key += (scale ? (e / *scale).str() : std::string("0")) + ',';
  }
  return key;
}

}  // namespace

void for_each_model(const ModelGrid& grid, const std::function<bool(const FiniteModel&)>& visit) {
  if (grid.theta_size == 0) return;
  const auto theta = default_theta_labels(grid.theta_size);
  for (std::size_t n = std::max<std::size_t>(1, grid.min_space); n <= grid.max_space; ++n) {
    const auto labels = default_sample_labels(n);
    for (std::size_t d = 1; d <= grid.max_denominator; ++d) {
      const auto rows = stochastic_rows(n, grid_values(d));
      std::vector<bool> row_has_d(rows.size(), false);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        row_has_d[r] = std::any_of(rows[r].begin(), rows[r].end(), [d](const Rational& v) {
          return v.denominator() == static_cast<unsigned long>(d);
        });
      }
      if (rows.empty()) continue;
      std::vector<std::size_t> pick(grid.theta_size, 0);
      std::vector<const RationalVector*> chosen(grid.theta_size);
      while (true) {
        bool has_d = false;
        for (std::size_t t = 0; t < grid.theta_size; ++t) {
          chosen[t] = &rows[pick[t]];
          has_d = has_d || row_has_d[pick[t]];
        }
        if (has_d && all_columns_reachable(chosen, n) && columns_sorted(chosen, n)) {
          std::vector<RationalVector> probs;
          for (const auto* r : chosen) probs.push_back(*r);
          if (!visit(FiniteModel(theta, labels, std::move(probs)))) return;
        }
        std::size_t t = grid.theta_size;
        while (t > 0 && pick[t - 1] + 1 == rows.size()) pick[--t] = 0;
        if (t == 0) break;
        ++pick[t - 1];
      }
    }
  }
}

std::vector<FiniteModel> enumerate_models(const ModelGrid& grid) {
  std::vector<FiniteModel> out;
  for_each_model(grid, [&](const FiniteModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<ModelDataPair> enumerate_pairs(const ModelGrid& grid) {
  std::vector<ModelDataPair> out;
  for_each_model(grid, [&](const FiniteModel& m) {
    const auto shared = std::make_shared<const FiniteModel>(m);
    for (std::size_t x : observation_representatives(m)) out.emplace_back(shared, x);
    return true;
  });
  return out;
}

CTransitivitySearch search_c_transitivity_counterexample(const SearchBounds& bounds) {
  constexpr std::size_t kChunk = 64;
  CTransitivitySearch result;
  bool unknown = false;
  std::vector<FiniteModel> chunk;
  auto flush = [&]() -> bool {
    auto hit = first_hit<FiniteModel, ModelOutcome>(chunk, bounds.workers, [&](const FiniteModel& m) {
      ModelOutcome o = scan_model_for_triple(m, bounds.max_space);
      return o.triple ? std::optional<ModelOutcome>(std::move(o)) : std::nullopt;
    });
    if (hit) {
      result.models_scanned += hit->first + 1;
      result.triple = std::move(hit->second.triple);
      result.status = SearchStatus::Found;
      chunk.clear();
      return false;
    }
    for (const auto& m : chunk) unknown = unknown || m.space_size() > bounds.max_space;
    result.models_scanned += chunk.size();
    chunk.clear();
    return true;
  };
  for_each_model(bounds.grid, [&](const FiniteModel& m) {
    chunk.push_back(m);
    return chunk.size() < kChunk || flush();
  });
  if (!result.triple && !chunk.empty()) flush();
  if (!result.triple) result.status = unknown ? SearchStatus::Unknown : SearchStatus::Exhausted;
  return result;
}

bool verify_c_transitivity_counterexample(const CTransitivityCounterexample& triple, std::size_t max_space) {
  if (!verify_c_witness(triple.first, triple.middle, triple.first_middle)) return false;
  if (!verify_c_witness(triple.middle, triple.last, triple.middle_last)) return false;
  if (!c_related(triple.first, triple.middle) || !c_related(triple.middle, triple.last)) return false;
  if (c_related(triple.first, triple.last)) return false;
  return !c_related_exhaustive(triple.first, triple.last, max_space).has_value();
}

LMinusScVerdict check_l_minus_sc(const ModelDataPair& p1, const ModelDataPair& p2, std::size_t max_space) {
  LMinusScVerdict verdict;
  verdict.factor = l_related(p1, p2);
  verdict.s_absent = !s_related(p1, p2).has_value();
  verdict.c_absent = !c_related(p1, p2).has_value();
  try {
    const bool exhaustive_absent = !c_related_exhaustive(p1, p2, max_space).has_value();
    if (exhaustive_absent != verdict.c_absent) {
      throw Error(ErrorCode::InvariantViolation, "conditionality oracles disagree");
    }
    verdict.certified = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SpaceTooLarge) throw;
  }
  return verdict;
}

LMinusScSearch search_l_minus_sc(const SearchBounds& bounds) {
  LMinusScSearch result;
  bool unknown = false;
  std::map<std::string, std::vector<ModelDataPair>> by_direction;
  for_each_model(bounds.grid, [&](const FiniteModel& m) {
    const auto shared = std::make_shared<const FiniteModel>(m);
    for (std::size_t x : observation_representatives(m)) {
      ModelDataPair current(shared, x);
      ++result.pairs_scanned;
      auto& earlier = by_direction[direction_key(m.column(x))];
      for (const auto& candidate : earlier) {
        if (s_related(candidate, current) || c_related(candidate, current)) continue;
        const LMinusScVerdict verdict = check_l_minus_sc(candidate, current, bounds.max_space);
        if (!verdict.certified) {
          unknown = true;
          continue;
        }
        if (verdict.qualifies()) {
          result.witness = LMinusScWitness{candidate, current, *verdict.factor};
          result.status = SearchStatus::Found;
          return false;
        }
      }
      earlier.push_back(std::move(current));
    }
    return true;
  });
  if (!result.witness) result.status = unknown ? SearchStatus::Unknown : SearchStatus::Exhausted;
  return result;
}

}  // namespace lplab
