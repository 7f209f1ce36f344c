#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ufourier/builder.hpp"
#include "ufourier/errors.hpp"

namespace ufourier {

struct TargetEntry {
  std::size_t point = 0;  // 0-based index into the series' points
  Complex value;
};

// h on (a prefix of) the universality set.
struct TargetFunction {
  std::vector<TargetEntry> entries;

  std::optional<Complex> value_at(std::size_t point) const;
};

struct HitReport {
  bool success = false;
  std::int64_t n = 0;
  std::size_t entry = 0;
  BlockLabel label;
  std::vector<std::size_t> points;
  std::vector<Complex> targets;
  std::vector<Complex> achieved;  // S_n(f, t_l), evaluated directly
  std::vector<double> errors;     // |achieved - target|
  double max_error = 0.0;
  double predicted_error = 0.0;   // from the checkpoint arithmetic
  // Staged search only.
  std::optional<std::int64_t> stage;
  std::optional<std::int64_t> stage_m;
  std::optional<double> stage_delta;
  std::optional<double> stage_tail;  // sum_{m > m_N} epsilon_m
  bool stage_tail_exact = false;     // the tail inequality was decided in rational arithmetic
};

// Search failed. best() is the smallest-error candidate that was tried;
// completed() holds earlier successful stages of a staged run.
class NoHit : public Error {
 public:
  NoHit(const std::string& what, HitReport best, std::vector<HitReport> completed = {})
      : Error(what), best_(std::move(best)), completed_(std::move(completed)) {}
  const HitReport& best() const { return best_; }
  const std::vector<HitReport>& completed() const { return completed_; }

 private:
  HitReport best_;
  std::vector<HitReport> completed_;
};

class StageInfeasible : public Error {
 public:
  StageInfeasible(const std::string& what, std::vector<HitReport> completed)
      : Error(what), completed_(std::move(completed)) {}
  const std::vector<HitReport>& completed() const { return completed_; }

 private:
  std::vector<HitReport> completed_;
};

// Partial-sum index n = 3N_j at which all points are within delta of their
// targets. Candidates are ranked by the checkpoint prediction
// c_j^(l) + v_l - h(t_l), v_l = other points' materialized components at
// t_l; the first one whose direct error is below delta wins. Throws NoHit.
HitReport usearch_finite(const UniversalSeries& s, const TargetFunction& targets, double delta);

struct StagedOptions {
  // delta_N for stage N (1-based); 1/N past the end of the list.
  std::vector<double> deltas;
};

// Stage N: delta_N, m_N = smallest m > m_{N-1} with sum_{m'>m} epsilon_m' < delta_N/3,
// then a finite search in the blocks of f_{m_N} against
// h(t_l) - sum_{m<m_N} f_m(t_l), l <= m_N, keeping n_N > n_{N-1}.
std::vector<HitReport> usearch_staged(const UniversalSeries& s, const TargetFunction& h, std::int64_t stages,
                                      const StagedOptions& options = {});

// Smallest m > after with tail < delta/3; decided exactly when the rule allows.
struct StageIndex {
  std::int64_t m = 0;
  double tail = 0.0;
  bool exact = false;
};
StageIndex select_stage_index(const CountableEpsRule& rule, double delta, std::int64_t after);

}  // namespace ufourier
