#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ufourier/fejer.hpp"

namespace ufourier {

// Integer interval {lo, ..., hi}.
struct Block {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool contains(std::int64_t k) const { return lo <= k && k <= hi; }
  friend bool operator==(const Block&, const Block&) = default;
};

// j for one-index schedules; (m, j) for diagonal ones.
struct BlockLabel {
  std::optional<std::int64_t> m;
  std::int64_t j = 1;

  friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

struct ScheduleEntry {
  BlockLabel label;
  FejerOrder order;
  std::int64_t shift = 0;  // 2N
  Block block;             // {N - n, ..., 3N + n}
};

/// Spectral blocks in strictly increasing position:
/// entries[i].block.hi < entries[i+1].block.lo.
class BlockSchedule {
 public:
  BlockSchedule() = default;
  // Validates ordering, block shape and shift; throws InvalidArgument.
  explicit BlockSchedule(std::vector<ScheduleEntry> entries);

  const std::vector<ScheduleEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const ScheduleEntry& operator[](std::size_t i) const { return entries_[i]; }

  // Index of the entry whose block contains k.
  std::optional<std::size_t> find_block(std::int64_t k) const;

 private:
  std::vector<ScheduleEntry> entries_;
};

inline constexpr std::int64_t kNoPredecessor = -1;

struct NextBlock {
  std::int64_t N = 0;
  Block block;
};

// Minimal N with N - n_next > prev_hi + margin (and N > n_next). With
// prev_hi = 3N_j + n_j this is 3N_j + n_j < N_{j+1} - n_{j+1}.
NextBlock next_block(std::int64_t prev_hi, std::int64_t n_next, std::int64_t margin = 0,
                     std::int64_t freq_cap = kMaxFrequency);

BlockSchedule schedule_finite(std::span<const std::int64_t> orders, std::int64_t margin = 0,
                              std::int64_t freq_cap = kMaxFrequency);

using DiagonalOrderRule = std::function<std::int64_t(std::int64_t m, std::int64_t j)>;

// Diagonals d = 1..D in the order (d,1), (d-1,2), ..., (1,d). The optional
// max_m drops labels with m > max_m (finite point prefixes).
BlockSchedule schedule_diagonal(const DiagonalOrderRule& order_for, std::int64_t diagonals,
                                std::int64_t margin = 0, std::int64_t freq_cap = kMaxFrequency,
                                std::optional<std::int64_t> max_m = std::nullopt);

// Labels (m, j) of the first D diagonals.
std::vector<BlockLabel> diagonal_labels(std::int64_t diagonals);

}  // namespace ufourier
