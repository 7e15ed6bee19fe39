#pragma once

#include "lahkit/bigint.hpp"
#include "lahkit/types.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Brute-force ground truth: enumerate set partitions of [n] into k blocks,
// weight each block by its number of linear / cyclic / trivial orderings,
// and aggregate by the set of block minima.

namespace lahkit::oracle {

// Enumeration beyond Bell(12) is refused.
inline constexpr std::size_t max_n = 12;

enum class BlockWeighting { lists, cycles, sets };

// Blocks hold 1-based elements, each block sorted, blocks ordered by minimum.
struct SetPartition {
  std::vector<std::vector<std::size_t>> blocks;

  std::vector<std::size_t> leaders() const {
    std::vector<std::size_t> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(b.front());
    return out;
  }
};

struct LeaderProfile {
  // sorted leader set -> summed ordering weight of partitions with that set
  std::map<std::vector<std::size_t>, Nat> entries;

  Nat total() const {
    Nat t;
    for (const auto& [key, g] : entries) t += g;
    return t;
  }
};

namespace detail {

inline void check_size(std::size_t n) {
  if (n > max_n) {
    throw ParameterError("oracle enumeration refused for n = " + std::to_string(n) +
                         " (limit " + std::to_string(max_n) + ")");
  }
}

// Restricted growth strings a[0..n) with exactly k blocks in which elements
// 0..r-1 each open a new block.
template <class F>
void rgs_walk(std::vector<std::uint8_t>& a, std::size_t i, std::size_t blocks, std::size_t k,
              std::size_t r, F& f) {
  const std::size_t n = a.size();
  if (blocks + (n - i) < k) return;
  if (i == n) {
    if (blocks == k) f(static_cast<const std::vector<std::uint8_t>&>(a));
    return;
  }
  if (i >= r) {
    for (std::size_t b = 0; b < blocks; ++b) {
      a[i] = static_cast<std::uint8_t>(b);
      rgs_walk(a, i + 1, blocks, k, r, f);
    }
  }
  if (blocks < k) {
    a[i] = static_cast<std::uint8_t>(blocks);
    rgs_walk(a, i + 1, blocks + 1, k, r, f);
  }
}

}  // namespace detail

// Calls f(rgs) for every partition of [n] into k blocks with 1..r in distinct
// blocks, in lexicographic order of the restricted growth string.
template <class F>
void for_each_partition(std::size_t n, std::size_t k, std::size_t r, F&& f) {
  detail::check_size(n);
  if (k > n || r > k) return;
  std::vector<std::uint8_t> a(n);
  detail::rgs_walk(a, 0, 0, k, r, f);
}

inline SetPartition to_partition(const std::vector<std::uint8_t>& rgs) {
  SetPartition p;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] == p.blocks.size()) p.blocks.emplace_back();
    p.blocks[rgs[i]].push_back(i + 1);
  }
  return p;
}

inline std::vector<SetPartition> set_partitions(std::size_t n, std::size_t k, std::size_t r = 0) {
  std::vector<SetPartition> out;
  for_each_partition(n, k, r, [&](const auto& rgs) { out.push_back(to_partition(rgs)); });
  return out;
}

// Number of orderings of a block of the given size under w.
inline Nat block_weight(BlockWeighting w, std::size_t size) {
  switch (w) {
    case BlockWeighting::lists: return factorial(static_cast<unsigned>(size));
    case BlockWeighting::cycles: return factorial(static_cast<unsigned>(size - 1));
    case BlockWeighting::sets: return Nat{1};
  }
  return Nat{1};
}

inline LeaderProfile enumerate_profiles(std::size_t n, std::size_t k, BlockWeighting w,
                                        std::size_t r) {
  LeaderProfile profile;
  std::vector<Nat> weight_of_size(n + 1);
  for (std::size_t m = 1; m <= n; ++m) weight_of_size[m] = block_weight(w, m);

  std::vector<std::size_t> sizes;
  std::vector<std::size_t> leaders;
  for_each_partition(n, k, r, [&](const std::vector<std::uint8_t>& rgs) {
    sizes.assign(k, 0);
    leaders.clear();
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (sizes[rgs[i]]++ == 0) leaders.push_back(i + 1);
    }
    Nat g{1};
    for (std::size_t m : sizes) g *= weight_of_size[m];
    profile.entries[leaders] += g;
  });
  return profile;
}

// Number of ordered s-tuples of partitions sharing one leader set.
inline Nat oracle_count(const TriangleKind& kind, std::size_t n, std::size_t k, Level s) {
  BlockWeighting w = BlockWeighting::lists;
  std::size_t r = 0;
  switch (kind.family()) {
    case Family::lah_hl: break;
    case Family::stirling_first_hl: w = BlockWeighting::cycles; break;
    case Family::stirling_second_hl: w = BlockWeighting::sets; break;
    case Family::lr_lah: r = kind.r(); break;
    case Family::lah_order:
      throw ParameterError("no combinatorial oracle for Lah numbers of order s");
  }
  Nat total;
  for (const auto& [key, g] : enumerate_profiles(n, k, w, r).entries) total += ipow(g, s.value());
  return total;
}

// Total weighted count: classical Lah, unsigned Stirling first kind, or
// Stirling second kind.
inline Nat classic_count(std::size_t n, std::size_t k, BlockWeighting w) {
  return enumerate_profiles(n, k, w, 0).total();
}

}  // namespace lahkit::oracle
