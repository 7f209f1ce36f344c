#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "ufourier/fejer.hpp"
#include "ufourier/rational.hpp"
#include "ufourier/schedule.hpp"
#include "ufourier/trigpoly.hpp"

namespace ufourier {

// epsilon_j = scale * 2^{-j}.
struct FiniteEpsRule {
  double scale = 1.0;

  double eps(std::int64_t j) const;
  // sum_{j > J} eps_j.
  double tail(std::int64_t J) const;
  Rational exact_tail(std::int64_t J) const;
};

enum class CountableEpsFamily {
  halves,          // scale * 2^{-(m+j)}
  quarters,        // scale * 4^{-(m+j)}
  quarters_gauss,  // scale * 4^{-(m+j)} * e^{-m*m}
};

struct CountableEpsRule {
  CountableEpsFamily family = CountableEpsFamily::halves;
  double scale = 1.0;

  double eps(std::int64_t m, std::int64_t j) const;
  double max_eps(std::int64_t m) const { return eps(m, 1); }
  // epsilon_m = sum_j eps(m, j).
  double row(std::int64_t m) const;
  // sum_{m > M} epsilon_m.
  double row_tail(std::int64_t M) const;
  double total() const { return row_tail(0); }
  // Exact counterparts; empty for the Gaussian family.
  std::optional<Rational> exact_eps(std::int64_t m, std::int64_t j) const;
  std::optional<Rational> exact_row_tail(std::int64_t M) const;
};

// Target values are scale * dense_point(j, dim), or explicit_targets[j-1]
// for the blocks it covers (single-point and finite builds only).
struct TargetEnum {
  double scale = 1.0;
  std::vector<std::vector<Complex>> explicit_targets;
};

struct SeriesSpec {
  std::vector<double> points;
  CertMode mode = CertMode::relaxed;
  std::int64_t truncation = 1;  // J blocks (single/finite) or D diagonals (countable)
  FiniteEpsRule finite_eps;
  CountableEpsRule countable_eps;
  // Fejer order n_j for relaxed builds; block j uses entry min(j, size) - 1.
  std::vector<std::int64_t> relaxed_orders{7};
  double kappa = kDefaultKappa;
  std::int64_t order_cap = kDefaultOrderCap;
  std::int64_t margin = 0;
  std::int64_t freq_cap = kMaxFrequency;
  TargetEnum targets;
};

enum class SeriesKind { single_point, finite, countable };

// One Fejer block moved to frequency 2N and to the point t_l.
struct SeriesTerm {
  std::size_t entry = 0;
  BlockLabel label;
  std::size_t point = 0;
  ComplexQ target;
  Complex target_value;
  TrigPoly poly;
};

// At n = 3N of the entry, S_n at each listed point is the listed value plus
// the contributions of the other points' components.
struct Checkpoint {
  std::size_t entry = 0;
  BlockLabel label;
  std::int64_t n = 0;
  std::vector<std::size_t> points;
  std::vector<Complex> expected;
};

/// A finite prefix of a universal series plus its tail certificate.
class UniversalSeries {
 public:
  SeriesKind kind = SeriesKind::single_point;
  SeriesSpec spec;
  BlockSchedule schedule;
  std::vector<SeriesTerm> terms;          // grouped by entry, then point
  std::vector<double> entry_eps;          // budget of each schedule entry
  std::vector<TrigPoly> entry_polys;      // sum of each entry's terms
  std::vector<Checkpoint> checkpoints;    // one per entry
  TrigPoly assembled;                     // sum of everything
  double tail_bound = 0.0;                // sum of budgets of all omitted blocks

  bool certified() const { return spec.mode == CertMode::strict; }
  // Budget not yet summed into S_n once the entry's block is complete:
  // later materialized entries plus tail_bound.
  double tail_after_entry(std::size_t entry) const;
  // Terms of one entry.
  std::vector<const SeriesTerm*> entry_terms(std::size_t entry) const;
  // Sum of materialized terms of the entries with label m (countable) at t, per point.
  Complex component_value(std::size_t point, double t, std::optional<std::int64_t> m = std::nullopt) const;
  // f_m(t): all materialized terms of row m (countable builds).
  Complex row_value(std::int64_t m, double t) const;
};

// Gaussian dyadic enumeration: level r = 0, 1, ... lists the tuples whose
// coordinates are (p + qi)/2^r with |p|, |q| <= r 2^r, lexicographically in
// (p_1, q_1, ..., p_dim, q_dim). Index is 1-based.
std::vector<ComplexQ> dense_point(std::int64_t index, std::int64_t dim = 1);

UniversalSeries build_single_point(const SeriesSpec& spec);
UniversalSeries build_finite(const SeriesSpec& spec);
UniversalSeries build_countable(const SeriesSpec& spec);
// Dispatches on kind.
UniversalSeries build_series(SeriesKind kind, const SeriesSpec& spec);

// Coefficient at k: zero off the blocks and for k < 0.
Complex series_coeff(const UniversalSeries& s, std::int64_t k);

struct SeriesValue {
  Complex value;
  double err = std::numeric_limits<double>::infinity();  // +inf when uncertified
};

SeriesValue series_value(const UniversalSeries& s, double t);

}  // namespace ufourier
