#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lplab {

/// A statistic on a finite sample space {0, ..., n-1}, identified with the
/// partition it induces. Stored canonically: blocks are numbered in order of
/// their smallest element, so `labels()` is a restricted growth string and
/// two partitions are equal iff their labels are equal.
class Partition {
 public:
  using Block = std::vector<std::size_t>;

  Partition() = default;

  /// Throws Error(InvalidPartition) unless the blocks are nonempty, pairwise
  /// disjoint and cover {0, ..., ground_size-1}.
  static Partition from_blocks(std::size_t ground_size, std::vector<Block> blocks);

  /// Any per-element labelling; equal labels mean same block.
  static Partition from_labels(std::span<const std::size_t> labels);

  static Partition trivial(std::size_t ground_size);
  static Partition discrete(std::size_t ground_size);

  std::size_t ground_size() const { return labels_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t block_of(std::size_t x) const { return labels_.at(x); }
  const Block& block_containing(std::size_t x) const { return blocks_.at(block_of(x)); }

  bool is_trivial() const { return blocks_.size() <= 1; }
  bool is_discrete() const { return blocks_.size() == labels_.size(); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.labels_ == b.labels_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  explicit Partition(std::vector<std::size_t> rgs);

  std::vector<std::size_t> labels_;
  std::vector<Block> blocks_;
};

/// True iff every block of `fine` lies inside a block of `coarse`, i.e. the
/// coarse statistic is a function of the fine one.
bool is_function_of(const Partition& coarse, const Partition& fine);

/// Finest common coarsening.
Partition join(const Partition& a, const Partition& b);

/// Visits every set partition of an n-set as a restricted growth string, in
/// lexicographic order. The visitor returns false to stop early.
void for_each_set_partition(std::size_t n,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit);

std::uint64_t bell_number(std::size_t n);

/// "x1 x2|x3" using the given point labels.
std::string format_partition(const Partition& p, std::span<const std::string> point_labels);

/// Inverse of format_partition; blocks separated by '|', points by ',' or
/// whitespace. Throws Error(UnknownLabel) or Error(InvalidPartition).
Partition parse_partition(std::string_view text, std::span<const std::string> point_labels);

}  // namespace lplab
