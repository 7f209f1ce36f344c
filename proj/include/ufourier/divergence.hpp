#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ufourier/builder.hpp"
#include "ufourier/trigpoly.hpp"

namespace ufourier {

/// Radii delta_m (m >= 1) of the cover intervals. Either geometric,
/// delta_m = scale * ratio^m (closed-form premeasure tails), or an explicit
/// finite list.
class DeltaRule {
 public:
  static DeltaRule geometric(double scale, double ratio);
  // delta_m = e^{-m}
  static DeltaRule exponential() { return geometric(1.0, 0.36787944117144233); }
  static DeltaRule from_values(std::vector<double> values);

  double delta(std::int64_t m) const;
  bool is_geometric() const { return values_.empty(); }
  // Largest m the rule can answer; geometric rules are unbounded.
  std::optional<std::int64_t> length() const;
  double scale() const { return scale_; }
  double ratio() const { return ratio_; }

 private:
  double scale_ = 1.0;
  double ratio_ = 0.5;
  std::vector<double> values_;
};

struct CoverInterval {
  double center = 0.0;
  double radius = 0.0;
};

struct DivergenceCover {
  DeltaRule rule;
  std::vector<double> points;
  std::vector<CoverInterval> intervals;  // I_1..I_M

  std::int64_t depth() const { return static_cast<std::int64_t>(intervals.size()); }
  // t in I_m (circular distance to t_m below delta_m), 1-based m.
  bool contains(std::int64_t m, double t) const;
  // t in the union of I_l for m0 <= l <= M.
  bool in_tail_union(double t, std::int64_t m0) const;
};

// Throws InvalidArgument unless the radii are positive and strictly decreasing
// on 1..M and at least M points are given.
DivergenceCover build_cover(const DeltaRule& rule, std::vector<double> points, std::int64_t M);

struct Premeasure {
  double partial = 0.0;                // sum_{m=m0}^{M} (2 delta_m)^a
  std::optional<double> infinite_tail;  // sum_{m>=m0} (2 delta_m)^a, geometric rules
};

Premeasure premeasure(const DivergenceCover& c, double a, std::int64_t m0, std::int64_t M);

// r_m = max_j eps_{m,j} * sum_{l<=m} 1/delta_l.
std::vector<double> condition15_profile(const CountableEpsRule& eps, const DeltaRule& deltas, std::int64_t M);
// r_m = max_j eps_{m,j} * sum_{l<=m} 1/|t - t_l| for a fixed probe t.
// Throws InvalidArgument when t coincides with some t_l.
std::vector<double> condition15_profile(const CountableEpsRule& eps, std::span<const double> points, double t,
                                        std::int64_t M);

// Circular distance on R/2pi.
double circle_distance(double a, double b);

struct OscillationRow {
  double t = 0.0;
  double osc_re = 0.0;
  double osc_im = 0.0;
  double osc = 0.0;  // max(osc_re, osc_im)
  Complex last;
  bool settled = false;
};

// Spread of S_n(p, t) over every n in [n_min, max frequency]; S_n only changes
// at stored frequencies, so the scan is exact.
std::vector<OscillationRow> oscillation_scan(const TrigPoly& p, std::span<const double> t_grid,
                                             std::int64_t n_min, double tol = 1e-9);
std::vector<OscillationRow> oscillation_scan(const UniversalSeries& s, std::span<const double> t_grid,
                                             std::int64_t n_min, double tol = 1e-9);

struct RogosinskiProbe {
  double t0 = 0.0;
  Complex s;
  std::vector<std::pair<std::int64_t, double>> pairs;  // (n_j, theta_j)
  double a = 0.5;
  double b = 1.5;

  // theta_j = phi / n_j.
  static RogosinskiProbe with_phase(double t0, Complex s, std::span<const std::int64_t> ns, double phi, double a,
                                    double b);
  // Window 0 < a < b < 2pi, a <= n theta <= b, n strictly increasing.
  void validate() const;
};

// Plain: S_n(t0+th) - (S_n(t0) - s) e^{i n th} - s.
// Symmetric: (S_n(t0+th) + S_n(t0-th))/2 - (S_n(t0) - s) cos(n th) - s.
std::vector<Complex> rogosinski_residual(const TrigPoly& p, const RogosinskiProbe& probe, bool symmetric);
std::vector<Complex> rogosinski_residual(const UniversalSeries& s, const RogosinskiProbe& probe, bool symmetric);

}  // namespace ufourier
