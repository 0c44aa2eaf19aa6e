#include "lplab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lplab/error.hpp"

namespace lplab {

Partition::Partition(std::vector<std::size_t> rgs) : labels_(std::move(rgs)) {
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    if (labels_[x] >= blocks_.size()) blocks_.resize(labels_[x] + 1);
    blocks_[labels_[x]].push_back(x);
  }
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  std::unordered_map<std::size_t, std::size_t> renumber;
  std::vector<std::size_t> rgs;
  rgs.reserve(labels.size());
  for (std::size_t label : labels) {
    auto [it, inserted] = renumber.try_emplace(label, renumber.size());
    rgs.push_back(it->second);
  }
  return Partition(std::move(rgs));
}

Partition Partition::from_blocks(std::size_t ground_size, std::vector<Block> blocks) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(ground_size, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorCode::InvalidPartition, "empty block");
    for (std::size_t x : blocks[b]) {
      if (x >= ground_size) throw Error(ErrorCode::InvalidPartition, "point outside ground set");
      if (owner[x] != unset) throw Error(ErrorCode::InvalidPartition, "blocks overlap");
      owner[x] = b;
    }
  }
  if (std::find(owner.begin(), owner.end(), unset) != owner.end()) {
    throw Error(ErrorCode::InvalidPartition, "blocks do not cover the ground set");
  }
  return from_labels(owner);
}

Partition Partition::trivial(std::size_t ground_size) {
  return Partition(std::vector<std::size_t>(ground_size, 0));
}

Partition Partition::discrete(std::size_t ground_size) {
  std::vector<std::size_t> rgs(ground_size);
  std::iota(rgs.begin(), rgs.end(), std::size_t{0});
  return Partition(std::move(rgs));
}

bool is_function_of(const Partition& coarse, const Partition& fine) {
  if (coarse.ground_size() != fine.ground_size()) {
    throw Error(ErrorCode::GroundSetMismatch, "partitions over different ground sets");
  }
  for (const auto& block : fine.blocks()) {
    const std::size_t target = coarse.block_of(block.front());
    for (std::size_t x : block) {
      if (coarse.block_of(x) != target) return false;
    }
  }
  return true;
}

Partition join(const Partition& a, const Partition& b) {
  if (a.ground_size() != b.ground_size()) {
    throw Error(ErrorCode::GroundSetMismatch, "partitions over different ground sets");
  }
  const std::size_t n = a.ground_size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Partition* p : {&a, &b}) {
    for (const auto& block : p->blocks()) {
      for (std::size_t x : block) parent[find(x)] = find(block.front());
    }
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t x = 0; x < n; ++x) roots[x] = find(x);
  return Partition::from_labels(roots);
}

void for_each_set_partition(std::size_t n,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (n == 0) {
    visit({});
    return;
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    if (!visit(rgs)) return;
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

std::string format_partition(const Partition& p, std::span<const std::string> point_labels) {
  std::string out;
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b > 0) out += '|';
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ' ';
      out += block[i] < point_labels.size() ? point_labels[block[i]] : std::to_string(block[i]);
    }
  }
  return out;
}

Partition parse_partition(std::string_view text, std::span<const std::string> point_labels) {
  std::vector<Partition::Block> blocks(1);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto it = std::find(point_labels.begin(), point_labels.end(), token);
    if (it == point_labels.end()) throw Error(ErrorCode::UnknownLabel, "unknown sample label '" + token + "'");
    blocks.back().push_back(static_cast<std::size_t>(it - point_labels.begin()));
    token.clear();
  };
  for (char ch : text) {
    if (ch == '|') {
      flush();
      blocks.emplace_back();
    } else if (ch == ',' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return Partition::from_blocks(point_labels.size(), std::move(blocks));
}

}  // namespace lplab
