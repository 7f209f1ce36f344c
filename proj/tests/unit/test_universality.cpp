#include <doctest.h>

#include <cmath>

#include "ufourier/phase.hpp"
#include "ufourier/universality.hpp"

using namespace ufourier;

namespace {

SeriesSpec relaxed(std::vector<double> points, std::int64_t truncation, std::int64_t n) {
  SeriesSpec s;
  s.points = std::move(points);
  s.truncation = truncation;
  s.relaxed_orders = {n};
  return s;
}

TargetFunction targets(std::vector<Complex> values) {
  TargetFunction h;
  for (std::size_t l = 0; l < values.size(); ++l) h.entries.push_back({l, values[l]});
  return h;
}

}  // namespace

TEST_CASE("single point: a consumed dense value is hit exactly") {
  auto s = build_single_point(relaxed({0.0}, 5, 3));
  const Complex c3 = s.checkpoints[2].expected[0];
  auto r = usearch_finite(s, targets({c3}), 1e-6);
  CHECK(r.success);
  CHECK(r.n == s.checkpoints[2].n);
  CHECK(r.max_error < 1e-9);
}

TEST_CASE("single point: out-of-reach target throws NoHit with the best candidate") {
  auto s = build_single_point(relaxed({0.0}, 5, 3));
  try {
    usearch_finite(s, targets({Complex(100, 0)}), 0.5);
    FAIL("expected NoHit");
  } catch (const NoHit& e) {
    CHECK(e.best().max_error > 90);
    CHECK_FALSE(e.best().success);
  }
}

TEST_CASE("two points: zero target") {
  auto s = build_finite(relaxed({0.0, kPi}, 6, 3));
  auto r = usearch_finite(s, targets({0.0, 0.0}), 0.5);
  CHECK(r.success);
  // Oracle: scan every checkpoint directly.
  double best = 1e9;
  for (const auto& cp : s.checkpoints) {
    const double e = std::max(std::abs(partial_sum(s.assembled, cp.n, 0.0)), std::abs(partial_sum(s.assembled, cp.n, kPi)));
    best = std::min(best, e);
  }
  CHECK(best < 0.5);
  for (std::size_t l = 0; l < 2; ++l) {
    CHECK(r.errors[l] < 0.5);
    CHECK(std::abs(r.errors[l] - std::abs(partial_sum(s.assembled, r.n, s.spec.points[l]) - r.targets[l])) < 1e-12);
  }
}

TEST_CASE("ties resolve to the smallest j") {
  SeriesSpec spec = relaxed({0.0}, 3, 2);
  spec.targets.explicit_targets = {{Complex(1, 0)}, {Complex(1, 0)}, {Complex(1, 0)}};
  auto s = build_single_point(spec);
  // Every checkpoint lands exactly at 1 + (later blocks vanish at t0, earlier ones are complete).
  auto r = usearch_finite(s, targets({Complex(1, 0)}), 0.1);
  CHECK(r.entry == 0);
}

TEST_CASE("usearch_finite preconditions") {
  auto s = build_finite(relaxed({0.0, 1.0}, 2, 3));
  CHECK_THROWS_AS(usearch_finite(s, targets({0.0}), 0.5), InvalidArgument);
  CHECK_THROWS_AS(usearch_finite(s, targets({0.0, 0.0}), 0.0), InvalidArgument);
}

TEST_CASE("stage index rule") {
  CountableEpsRule q{CountableEpsFamily::quarters, 1.0};
  auto first = select_stage_index(q, 1.0, 0);
  CHECK(first.m == 1);
  CHECK(first.exact);
  CHECK(*q.exact_row_tail(1) < Rational(1, 3));
  auto later = select_stage_index(q, 1.0 / 100.0, 0);
  // 4^{-m}/9 < 1/300 first at m = 3.
  CHECK(later.m == 3);
  CHECK(select_stage_index(q, 0.5, 1).m == 2);
}

TEST_CASE("staged search: stage 1 hits a consumed value") {
  auto spec = relaxed({0.0}, 3, 3);
  spec.countable_eps = {CountableEpsFamily::quarters, 1.0};
  auto s = build_countable(spec);
  const Complex c = s.checkpoints.back().expected[0];
  auto rs = usearch_staged(s, targets({c}), 1);
  REQUIRE(rs.size() == 1);
  CHECK(*rs[0].stage_m == 1);
  CHECK(rs[0].max_error < 1.0);
}

TEST_CASE("staged search: two stages, increasing n, direct errors") {
  auto spec = relaxed({0.0, 2.0, 4.0, 5.0}, 6, 1);
  spec.countable_eps = {CountableEpsFamily::quarters, 1.0};
  auto s = build_countable(spec);
  auto h = targets({std::polar(0.25, 0.0), std::polar(0.25, 2.0), std::polar(0.25, 4.0), std::polar(0.25, 5.0)});
  auto rs = usearch_staged(s, h, 2);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].n < rs[1].n);
  CHECK(*rs[0].stage_m == 1);
  CHECK(rs[0].max_error < 1.0);
  CHECK(rs[1].max_error < 0.5);
  for (const auto& r : rs)
    for (std::size_t i = 0; i < r.points.size(); ++i)
      CHECK(std::abs(r.errors[i] - std::abs(partial_sum(s.assembled, r.n, s.spec.points[r.points[i]]) - r.targets[i])) <
            1e-12);
}

TEST_CASE("staged search beyond the build is infeasible") {
  auto spec = relaxed({0.0}, 2, 1);
  auto s = build_countable(spec);
  CHECK_THROWS_AS(usearch_staged(s, targets({0.0}), 3), StageInfeasible);
}
