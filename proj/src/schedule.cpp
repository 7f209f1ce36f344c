#include "ufourier/schedule.hpp"

#include <algorithm>
#include <string>

#include "ufourier/errors.hpp"

namespace ufourier {

BlockSchedule::BlockSchedule(std::vector<ScheduleEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    const auto N = e.order.N, n = e.order.n;
    if (e.block.lo != N - n || e.block.hi != 3 * N + n || e.shift != 2 * N)
      throw InvalidArgument("BlockSchedule: entry " + std::to_string(i) + " does not match {N-n,...,3N+n}");
    if (e.block.lo < 1) throw InvalidArgument("BlockSchedule: blocks must start at frequency >= 1");
    if (i > 0 && !(entries_[i - 1].block.hi < e.block.lo))
      throw InvalidArgument("BlockSchedule: blocks " + std::to_string(i - 1) + " and " + std::to_string(i) +
                            " are not separated");
  }
}

std::optional<std::size_t> BlockSchedule::find_block(std::int64_t k) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), k,
                             [](std::int64_t key, const ScheduleEntry& e) { return key < e.block.lo; });
  if (it == entries_.begin()) return std::nullopt;
  --it;
  if (!it->block.contains(k)) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

NextBlock next_block(std::int64_t prev_hi, std::int64_t n_next, std::int64_t margin, std::int64_t freq_cap) {
  if (n_next < 1) throw InvalidArgument("next_block: n_next must be >= 1");
  if (margin < 0) throw InvalidArgument("next_block: margin must be nonnegative");
  if (prev_hi < kNoPredecessor) throw InvalidArgument("next_block: prev_hi below the no-predecessor sentinel");
  const std::int64_t N = std::max(prev_hi + margin + n_next + 1, n_next + 1);
  // 3N + n computed in a form that cannot overflow before the comparison.
  if (N > (freq_cap - n_next) / 3)
    throw QuotaError("next_block: block top 3N+n for N=" + std::to_string(N) + ", n=" + std::to_string(n_next) +
                     " exceeds the frequency cap " + std::to_string(freq_cap));
  return {N, Block{N - n_next, 3 * N + n_next}};
}

namespace {

ScheduleEntry make_entry(BlockLabel label, std::int64_t prev_hi, std::int64_t n, std::int64_t margin,
                         std::int64_t cap) {
  const auto nb = next_block(prev_hi, n, margin, cap);
  return {label, FejerOrder(nb.N, n), 2 * nb.N, nb.block};
}

}  // namespace

BlockSchedule schedule_finite(std::span<const std::int64_t> orders, std::int64_t margin, std::int64_t freq_cap) {
  if (orders.empty()) throw InvalidArgument("schedule_finite: orders must be nonempty");
  std::vector<ScheduleEntry> entries;
  std::int64_t prev_hi = kNoPredecessor;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    entries.push_back(make_entry({std::nullopt, static_cast<std::int64_t>(j + 1)}, prev_hi, orders[j], margin,
                                 freq_cap));
    prev_hi = entries.back().block.hi;
  }
  return BlockSchedule(std::move(entries));
}

std::vector<BlockLabel> diagonal_labels(std::int64_t diagonals) {
  std::vector<BlockLabel> labels;
  for (std::int64_t d = 1; d <= diagonals; ++d)
    for (std::int64_t j = 1; j <= d; ++j) labels.push_back({d - j + 1, j});
  return labels;
}

BlockSchedule schedule_diagonal(const DiagonalOrderRule& order_for, std::int64_t diagonals, std::int64_t margin,
                                std::int64_t freq_cap, std::optional<std::int64_t> max_m) {
  if (diagonals < 1) throw InvalidArgument("schedule_diagonal: need at least one diagonal");
  std::vector<ScheduleEntry> entries;
  std::int64_t prev_hi = kNoPredecessor;
  for (const auto& label : diagonal_labels(diagonals)) {
    if (max_m && *label.m > *max_m) continue;
    entries.push_back(make_entry(label, prev_hi, order_for(*label.m, label.j), margin, freq_cap));
    prev_hi = entries.back().block.hi;
  }
  return BlockSchedule(std::move(entries));
}

}  // namespace ufourier
