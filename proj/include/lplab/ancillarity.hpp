#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lplab/error.hpp"
#include "lplab/model.hpp"
#include "lplab/partition.hpp"

namespace lplab {

/// Exhaustive ancillary enumeration is Bell-number expensive; spaces larger
/// than this are refused with Error(SpaceTooLarge) unless the caller raises it.
inline constexpr std::size_t kDefaultMaxSpace = 12;
/// Hard ceiling regardless of configuration (subset tables are 2^n).
inline constexpr std::size_t kAbsoluteMaxSpace = 24;

bool is_ancillary(const FiniteModel& model, const Partition& partition);

/// Theta-free block masses; throws Error(NotAncillary).
RationalVector ancillary_block_masses(const FiniteModel& model, const Partition& partition);

/// Every ancillary partition of the sample space, in restricted-growth-string
/// order. Throws Error(SpaceTooLarge) when |X| > max_space.
std::vector<Partition> enumerate_ancillaries(const FiniteModel& model, std::size_t max_space = kDefaultMaxSpace);

/// Ancillaries not strictly refined by another ancillary.
std::vector<Partition> maximal_ancillaries(const FiniteModel& model, std::size_t max_space = kDefaultMaxSpace);

/// Raised by laminal_ancillary when the common coarsenings of the maximal
/// ancillaries have no single finest element.
class NotUniqueError : public Error {
 public:
  explicit NotUniqueError(std::vector<Partition> antichain);
  const std::vector<Partition>& antichain() const { return antichain_; }

 private:
  std::vector<Partition> antichain_;
};

/// The finest ancillary that is a function of every maximal ancillary.
Partition laminal_ancillary(const FiniteModel& model, std::size_t max_space = kDefaultMaxSpace);

struct AncillaryCatalog {
  std::vector<Partition> all;
  std::vector<Partition> maximal;
  Partition laminal;
};

AncillaryCatalog ancillary_catalog(const FiniteModel& model, std::size_t max_space = kDefaultMaxSpace);

/// The conditional pair given the observed value of an ancillary: sample space
/// is the block B containing x_obs (in original order), probabilities
/// f_theta(x) / P(B). Throws Error(NotAncillary).
ModelDataPair condition_on_block(const ModelDataPair& pair, const Partition& ancillary);

enum class Parent { First, Second };

/// Certificate that the child pair is, up to relabelling, the conditional of
/// the parent pair given an ancillary.
struct CWitness {
  Parent parent = Parent::First;
  Partition ancillary;
  /// position in condition_on_block(parent, ancillary) -> child sample index
  SampleBijection bijection;
};

/// One conditioning step in either direction. Decided by matching the
/// child's columns, scaled by the theta-free block mass, against the parent's
/// columns; the witness ancillary is {B, X \ B}.
/// Throws Error(ParameterSpaceMismatch).
std::optional<CWitness> c_related(const ModelDataPair& p1, const ModelDataPair& p2);

/// As c_related, with the witness ancillary required to be a function of the
/// parent's minimal sufficient partition.
std::optional<CWitness> durbin_c_related(const ModelDataPair& p1, const ModelDataPair& p2);

/// Same relations decided by enumerating every ancillary of each candidate
/// parent. Throws Error(SpaceTooLarge).
std::optional<CWitness> c_related_exhaustive(const ModelDataPair& p1, const ModelDataPair& p2,
                                             std::size_t max_space = kDefaultMaxSpace);
std::optional<CWitness> durbin_c_related_exhaustive(const ModelDataPair& p1, const ModelDataPair& p2,
                                                    std::size_t max_space = kDefaultMaxSpace);

/// Replays a witness: conditions the parent and checks the bijection maps the
/// result exactly onto the child.
bool verify_c_witness(const ModelDataPair& p1, const ModelDataPair& p2, const CWitness& witness);

}  // namespace lplab
