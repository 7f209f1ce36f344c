#include "ufourier/universality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ufourier {

std::optional<Complex> TargetFunction::value_at(std::size_t point) const {
  for (const auto& e : entries)
    if (e.point == point) return e.value;
  return std::nullopt;
}

namespace {

struct Candidate {
  std::size_t entry;
  double predicted;
};

// Shared core: rank candidate entries by predicted error, then verify each on
// the full series until one is below delta.
HitReport search_candidates(const UniversalSeries& s, std::vector<Candidate> candidates,
                            const std::vector<std::size_t>& points, const std::vector<Complex>& h,
                            double delta, bool& found) {
  // Stable sort over ascending entries keeps the smallest j first among ties.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.predicted < b.predicted; });
  HitReport best;
  best.max_error = std::numeric_limits<double>::infinity();
  found = false;
  for (const auto& c : candidates) {
    HitReport r;
    r.entry = c.entry;
    r.label = s.schedule[c.entry].label;
    r.n = s.checkpoints[c.entry].n;
    r.points = points;
    r.targets = h;
    r.predicted_error = c.predicted;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Complex got = partial_sum(s.assembled, r.n, s.spec.points[points[i]]);
      r.achieved.push_back(got);
      r.errors.push_back(std::abs(got - h[i]));
    }
    r.max_error = r.errors.empty() ? 0.0 : *std::max_element(r.errors.begin(), r.errors.end());
    if (r.max_error < delta) {
      r.success = true;
      found = true;
      return r;
    }
    if (r.max_error < best.max_error) best = std::move(r);
  }
  return best;
}

}  // namespace

HitReport usearch_finite(const UniversalSeries& s, const TargetFunction& targets, double delta) {
  if (s.kind == SeriesKind::countable)
    throw InvalidArgument("usearch_finite: countable series need usearch_staged");
  if (!(delta > 0.0)) throw InvalidArgument("usearch_finite: delta must be positive");
  const std::size_t m = s.spec.points.size();
  std::vector<std::size_t> points(m);
  std::vector<Complex> h(m);
  for (std::size_t l = 0; l < m; ++l) {
    auto v = targets.value_at(l);
    if (!v) throw InvalidArgument("usearch_finite: no target for point " + std::to_string(l + 1));
    points[l] = l;
    h[l] = *v;
  }
  for (const auto& e : targets.entries)
    if (e.point >= m) throw InvalidArgument("usearch_finite: target index beyond the series' points");

  // v_l: the other components' materialized values at t_l.
  std::vector<Complex> cross(m);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t other = 0; other < m; ++other)
      if (other != l) cross[l] += s.component_value(other, s.spec.points[l]);

  std::vector<Candidate> candidates;
  for (std::size_t e = s.checkpoints.size(); e-- > 0;) {
    const auto& cp = s.checkpoints[e];
    double pred = 0.0;
    for (std::size_t l = 0; l < m; ++l) pred = std::max(pred, std::abs(cp.expected[l] + cross[l] - h[l]));
    candidates.push_back({e, pred});
  }
  std::reverse(candidates.begin(), candidates.end());

  bool found = false;
  HitReport r = search_candidates(s, std::move(candidates), points, h, delta, found);
  if (!found) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "usearch_finite: no checkpoint within delta=" << delta << "; best error " << r.max_error;
    throw NoHit(msg.str(), r);
  }
  return r;
}

StageIndex select_stage_index(const CountableEpsRule& rule, double delta, std::int64_t after) {
  if (!(delta > 0.0)) throw InvalidArgument("select_stage_index: delta must be positive");
  const Rational bound = exact_rational(delta) / Rational(3);
  for (std::int64_t m = std::max<std::int64_t>(after, 0) + 1; m < 100000; ++m) {
    if (auto exact = rule.exact_row_tail(m)) {
      if (*exact < bound) return {m, to_double(*exact), true};
    } else {
      const double tail = rule.row_tail(m);
      if (tail < delta / 3.0) return {m, tail, false};
    }
  }
  throw QuotaError("select_stage_index: no row index satisfies the tail bound");
}

std::vector<HitReport> usearch_staged(const UniversalSeries& s, const TargetFunction& h, std::int64_t stages,
                                      const StagedOptions& options) {
  if (s.kind != SeriesKind::countable) throw InvalidArgument("usearch_staged: needs a countable build");
  if (stages < 1) throw InvalidArgument("usearch_staged: stages must be >= 1");
  const auto materialized_rows = static_cast<std::int64_t>(s.spec.points.size());
  std::vector<HitReport> done;
  std::int64_t prev_m = 0;
  std::int64_t prev_n = -1;

  for (std::int64_t stage = 1; stage <= stages; ++stage) {
    const double delta = static_cast<std::size_t>(stage) <= options.deltas.size()
                             ? options.deltas[static_cast<std::size_t>(stage - 1)]
                             : 1.0 / static_cast<double>(stage);
    const StageIndex idx = select_stage_index(s.spec.countable_eps, delta, prev_m);
    const std::int64_t mN = idx.m;

    std::vector<std::size_t> row_entries;
    for (std::size_t e = 0; e < s.schedule.size(); ++e)
      if (s.schedule[e].label.m == mN) row_entries.push_back(e);
    if (mN > materialized_rows || row_entries.empty())
      throw StageInfeasible("usearch_staged: stage " + std::to_string(stage) + " needs row m=" +
                                std::to_string(mN) + ", beyond the materialized build",
                            done);

    const auto count = static_cast<std::size_t>(mN);
    std::vector<std::size_t> points(count);
    std::vector<Complex> target(count), residual(count), cross(count);
    for (std::size_t l = 0; l < count; ++l) {
      auto v = h.value_at(l);
      if (!v) throw InvalidArgument("usearch_staged: h has no value at point " + std::to_string(l + 1));
      points[l] = l;
      target[l] = *v;
      const double tl = s.spec.points[l];
      residual[l] = *v;
      for (std::int64_t m = 1; m < mN; ++m) residual[l] -= s.row_value(m, tl);
      for (std::size_t other = 0; other < count; ++other)
        if (other != l) cross[l] += s.component_value(other, tl, mN);
    }

    std::vector<Candidate> candidates;
    for (auto it = row_entries.rbegin(); it != row_entries.rend(); ++it) {
      const auto& cp = s.checkpoints[*it];
      if (cp.n <= prev_n) continue;
      double pred = 0.0;
      for (std::size_t l = 0; l < count; ++l)
        pred = std::max(pred, std::abs(cp.expected[l] + cross[l] - residual[l]));
      candidates.push_back({*it, pred});
    }
    std::reverse(candidates.begin(), candidates.end());

    bool found = false;
    HitReport r = search_candidates(s, std::move(candidates), points, target, delta, found);
    r.stage = stage;
    r.stage_m = mN;
    r.stage_delta = delta;
    r.stage_tail = idx.tail;
    r.stage_tail_exact = idx.exact;
    if (!found) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "usearch_staged: stage " << stage << " (m=" << mN << ", delta=" << delta
          << ") found no hit; best error " << r.max_error;
      throw NoHit(msg.str(), r, done);
    }
    prev_m = mN;
    prev_n = r.n;
    done.push_back(std::move(r));
  }
  return done;
}

}  // namespace ufourier
