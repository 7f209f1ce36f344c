#include "ufourier/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ufourier/errors.hpp"
#include "ufourier/phase.hpp"

namespace ufourier {

DeltaRule DeltaRule::geometric(double scale, double ratio) {
  if (!(scale > 0.0) || !(ratio > 0.0) || !(ratio < 1.0))
    throw InvalidArgument("DeltaRule::geometric: need scale > 0 and 0 < ratio < 1");
  DeltaRule r;
  r.scale_ = scale;
  r.ratio_ = ratio;
  return r;
}

DeltaRule DeltaRule::from_values(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("DeltaRule::from_values: empty list");
  DeltaRule r;
  r.values_ = std::move(values);
  return r;
}

double DeltaRule::delta(std::int64_t m) const {
  if (m < 1) throw InvalidArgument("DeltaRule: m must be >= 1");
  if (values_.empty()) return scale_ * std::pow(ratio_, static_cast<double>(m));
  if (static_cast<std::size_t>(m) > values_.size())
    throw InvalidArgument("DeltaRule: m=" + std::to_string(m) + " beyond the explicit list");
  return values_[static_cast<std::size_t>(m - 1)];
}

std::optional<std::int64_t> DeltaRule::length() const {
  if (values_.empty()) return std::nullopt;
  return static_cast<std::int64_t>(values_.size());
}

double circle_distance(double a, double b) { return std::abs(reduce_angle(a - b)); }

bool DivergenceCover::contains(std::int64_t m, double t) const {
  if (m < 1 || m > depth()) throw InvalidArgument("DivergenceCover::contains: m out of range");
  const auto& iv = intervals[static_cast<std::size_t>(m - 1)];
  return circle_distance(t, iv.center) < iv.radius;
}

bool DivergenceCover::in_tail_union(double t, std::int64_t m0) const {
  for (std::int64_t m = std::max<std::int64_t>(m0, 1); m <= depth(); ++m)
    if (contains(m, t)) return true;
  return false;
}

DivergenceCover build_cover(const DeltaRule& rule, std::vector<double> points, std::int64_t M) {
  if (M < 1) throw InvalidArgument("build_cover: M must be >= 1");
  if (static_cast<std::int64_t>(points.size()) < M)
    throw InvalidArgument("build_cover: need at least M points");
  DivergenceCover c{rule, std::move(points), {}};
  double prev = 0.0;
  for (std::int64_t m = 1; m <= M; ++m) {
    const double d = rule.delta(m);
    if (!(d > 0.0)) throw InvalidArgument("build_cover: radii must be positive");
    if (m > 1 && !(d < prev)) throw InvalidArgument("build_cover: radii must be strictly decreasing");
    prev = d;
    c.intervals.push_back({c.points[static_cast<std::size_t>(m - 1)], d});
  }
  return c;
}

Premeasure premeasure(const DivergenceCover& c, double a, std::int64_t m0, std::int64_t M) {
  if (!(a > 0.0)) throw InvalidArgument("premeasure: a must be positive");
  if (m0 < 1 || m0 > M) throw InvalidArgument("premeasure: need 1 <= m0 <= M");
  if (M > c.depth()) throw InvalidArgument("premeasure: M beyond the cover depth");
  Premeasure out;
  for (std::int64_t m = m0; m <= M; ++m) out.partial += std::pow(2.0 * c.rule.delta(m), a);
  if (c.rule.is_geometric()) {
    const double ra = std::pow(c.rule.ratio(), a);
    out.infinite_tail = std::pow(2.0 * c.rule.scale(), a) * std::pow(ra, static_cast<double>(m0)) / (1.0 - ra);
  }
  return out;
}

std::vector<double> condition15_profile(const CountableEpsRule& eps, const DeltaRule& deltas, std::int64_t M) {
  if (M < 1) throw InvalidArgument("condition15_profile: M must be >= 1");
  std::vector<double> r;
  double inv_sum = 0.0;
  for (std::int64_t m = 1; m <= M; ++m) {
    inv_sum += 1.0 / deltas.delta(m);
    r.push_back(eps.max_eps(m) * inv_sum);
  }
  return r;
}

std::vector<double> condition15_profile(const CountableEpsRule& eps, std::span<const double> points, double t,
                                        std::int64_t M) {
  if (M < 1) throw InvalidArgument("condition15_profile: M must be >= 1");
  if (static_cast<std::int64_t>(points.size()) < M)
    throw InvalidArgument("condition15_profile: need at least M points");
  std::vector<double> r;
  double inv_sum = 0.0;
  for (std::int64_t m = 1; m <= M; ++m) {
    const double d = circle_distance(t, points[static_cast<std::size_t>(m - 1)]);
    if (d == 0.0) throw InvalidArgument("condition15_profile: probe coincides with point " + std::to_string(m));
    inv_sum += 1.0 / d;
    r.push_back(eps.max_eps(m) * inv_sum);
  }
  return r;
}

std::vector<OscillationRow> oscillation_scan(const TrigPoly& p, std::span<const double> t_grid, std::int64_t n_min,
                                             double tol) {
  if (n_min < 0) throw InvalidArgument("oscillation_scan: n_min must be nonnegative");
  const std::int64_t top = std::max(p.max_abs_frequency(), n_min);
  std::vector<OscillationRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    const PartialSumProfile prof(p, t);
    Complex first = prof.at(n_min);
    double re_lo = first.real(), re_hi = first.real(), im_lo = first.imag(), im_hi = first.imag();
    const auto& bps = prof.breakpoints();
    for (std::size_t i = 0; i < bps.size(); ++i) {
      if (bps[i] <= n_min || bps[i] > top) continue;
      const Complex v = prof.cumulative()[i];
      re_lo = std::min(re_lo, v.real());
      re_hi = std::max(re_hi, v.real());
      im_lo = std::min(im_lo, v.imag());
      im_hi = std::max(im_hi, v.imag());
    }
    OscillationRow row;
    row.t = t;
    row.osc_re = re_hi - re_lo;
    row.osc_im = im_hi - im_lo;
    row.osc = std::max(row.osc_re, row.osc_im);
    row.last = prof.at(top);
    row.settled = row.osc < tol;
    rows.push_back(row);
  }
  return rows;
}

std::vector<OscillationRow> oscillation_scan(const UniversalSeries& s, std::span<const double> t_grid,
                                             std::int64_t n_min, double tol) {
  if (n_min >= s.assembled.max_abs_frequency() && !s.assembled.empty())
    throw InvalidArgument("oscillation_scan: n_min must lie below the top materialized frequency");
  return oscillation_scan(s.assembled, t_grid, n_min, tol);
}

RogosinskiProbe RogosinskiProbe::with_phase(double t0, Complex s, std::span<const std::int64_t> ns, double phi,
                                            double a, double b) {
  RogosinskiProbe p;
  p.t0 = t0;
  p.s = s;
  p.a = a;
  p.b = b;
  for (auto n : ns) {
    if (n < 1) throw InvalidArgument("RogosinskiProbe: n_j must be positive");
    p.pairs.emplace_back(n, phi / static_cast<double>(n));
  }
  p.validate();
  return p;
}

void RogosinskiProbe::validate() const {
  if (!(0.0 < a && a < b && b < kTwoPi)) throw InvalidArgument("RogosinskiProbe: need 0 < a < b < 2pi");
  // n*theta is formed in floating point; allow a relative rounding slack.
  const double slack = 1e-12 * b;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [n, theta] = pairs[i];
    const double prod = static_cast<double>(n) * theta;
    if (prod < a - slack || prod > b + slack)
      throw InvalidArgument("RogosinskiProbe: n_j*theta_j outside [a, b] at pair " + std::to_string(i + 1));
    if (i > 0 && n <= pairs[i - 1].first) throw InvalidArgument("RogosinskiProbe: n_j must be strictly increasing");
  }
}

std::vector<Complex> rogosinski_residual(const TrigPoly& p, const RogosinskiProbe& probe, bool symmetric) {
  probe.validate();
  const PartialSumProfile at_t0(p, probe.t0);
  std::vector<Complex> out;
  out.reserve(probe.pairs.size());
  for (const auto& [n, theta] : probe.pairs) {
    const Complex centre = at_t0.at(n) - probe.s;
    const double phase = static_cast<double>(n) * theta;
    Complex value;
    if (symmetric) {
      const Complex plus = partial_sum(p, n, probe.t0 + theta);
      const Complex minus = partial_sum(p, n, probe.t0 - theta);
      value = 0.5 * (plus + minus) - centre * std::cos(phase);
    } else {
      value = partial_sum(p, n, probe.t0 + theta) - centre * std::polar(1.0, phase);
    }
    out.push_back(value - probe.s);
  }
  return out;
}

std::vector<Complex> rogosinski_residual(const UniversalSeries& s, const RogosinskiProbe& probe, bool symmetric) {
  return rogosinski_residual(s.assembled, probe, symmetric);
}

}  // namespace ufourier
