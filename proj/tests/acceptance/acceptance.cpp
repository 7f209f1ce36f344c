// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ufourier/builder.hpp"
#include "ufourier/cantor.hpp"
#include "ufourier/divergence.hpp"
#include "ufourier/fejer.hpp"
#include "ufourier/phase.hpp"
#include "ufourier/universality.hpp"

using namespace ufourier;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  const char* name;
  double budget_s;  // 0: no time limit
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Shared builds.
SeriesSpec relaxed_single(double t0) {
  SeriesSpec s;
  s.points = {t0};
  s.truncation = 6;
  s.relaxed_orders = {7};
  return s;
}

SeriesSpec strict_single() {
  SeriesSpec s;
  s.points = {0.0};
  s.mode = CertMode::strict;
  s.truncation = 3;
  s.finite_eps.scale = 1.0;
  s.targets.scale = 1.0 / 16.0;
  return s;
}

SeriesSpec staged_countable() {
  SeriesSpec s;
  s.points = {0.0, 2.0, 4.0, 5.0};
  s.truncation = 6;
  s.relaxed_orders = {1};
  s.countable_eps = {CountableEpsFamily::quarters, 1.0};
  return s;
}

Outcome resonance_identity() {
  std::vector<Rational> harmonic{Rational(0)};
  for (int k = 1; k <= 64; ++k) harmonic.push_back(harmonic.back() + Rational(1, k));
  int checked = 0;
  for (int N = 2; N <= 64; ++N)
    for (int n = 1; n < N; ++n) {
      const auto s = exact_partial_sum_at_zero(fejer_coeffs(FejerOrder(N, n)), N);
      if (!s || s->re != harmonic[static_cast<std::size_t>(n)] || !s->im.is_zero())
        return {false, "S_N(Q,0) != H_n at N=" + std::to_string(N) + " n=" + std::to_string(n)};
      ++checked;
    }
  return {true, std::to_string(checked) + " orders exact"};
}

Outcome coefficient_table() {
  const auto q = fejer_coeffs(FejerOrder(5, 3));
  const std::vector<std::pair<std::int64_t, Rational>> table = {{2, Rational(1, 6)},  {3, Rational(1, 4)},
                                                                {4, Rational(1, 2)},  {6, Rational(-1, 2)},
                                                                {7, Rational(-1, 4)}, {8, Rational(-1, 6)}};
  if (q.size() != 12) return {false, "Q(5,3) has " + std::to_string(q.size()) + " terms"};
  for (const auto& [k, v] : table)
    for (std::int64_t kk : {k, -k}) {
      auto c = q.exact_coeff(kk);
      if (!c || *c != ComplexQ(v)) return {false, "Q(5,3) coefficient at " + std::to_string(kk)};
    }
  for (int N = 2; N <= 64; ++N)
    for (int n = 1; n < N; ++n) {
      const auto p = fejer_coeffs(FejerOrder(N, n));
      if (*p.exact_coeff(0) != ComplexQ{} || eval(p, 0.0) != Complex(0, 0))
        return {false, "nonzero constant term or value at 0 for N=" + std::to_string(N)};
    }
  return {true, "table exact; c(0) = 0 and Q(0) = 0 on N <= 64"};
}

Outcome variation_constant() {
  for (int N = 2; N <= 64; ++N)
    for (int n = 1; n < N; ++n) {
      auto tv = exact_coeff_total_variation(fejer_coeffs(FejerOrder(N, n)));
      if (!tv || *tv != Rational(4)) return {false, "variation != 4 at N=" + std::to_string(N)};
    }
  return {true, "variation = 4 exactly on N <= 64"};
}

Outcome uniform_boundedness() {
  double worst = 0.0;
  int wN = 0, wn = 0;
  for (int N = 2; N <= 256; ++N)
    for (int n = 1; n < N; ++n) {
      const double s = sup_norm_estimate(fejer_coeffs(FejerOrder(N, n)), 8192);
      if (s > worst) {
        worst = s;
        wN = N;
        wn = n;
      }
    }
  return {worst <= 3.71, "max grid sup " + fmt("%.6f", worst) + " at (" + std::to_string(wN) + "," +
                             std::to_string(wn) + "), bound 3.71"};
}

Outcome checkpoint_relation() {
  double worst = 0.0;
  for (double t0 : {0.0, 1.0}) {
    const auto s = build_single_point(relaxed_single(t0));
    for (std::int64_t j = 1; j <= 6; ++j) {
      const Complex c = dense_point(j)[0].to_complex();
      const auto& e = s.schedule[static_cast<std::size_t>(j - 1)];
      const Complex got = partial_sum(s.assembled, 3 * e.order.N, t0);
      worst = std::max(worst, std::abs(got - c) / (1 + std::abs(c)));
    }
  }
  return {worst < 1e-9, "max |S - c|/(1+|c|) = " + fmt("%.3g", worst)};
}

Outcome spectral_discipline() {
  std::vector<UniversalSeries> builds;
  builds.push_back(build_single_point(relaxed_single(0.0)));
  builds.push_back(build_single_point(relaxed_single(1.0)));
  builds.push_back(build_single_point(strict_single()));
  builds.push_back(build_countable(staged_countable()));
  {
    SeriesSpec f;
    f.points = {0.0, kPi, 2.0};
    f.truncation = 5;
    f.relaxed_orders = {2, 5, 9};
    builds.push_back(build_finite(f));
  }
  std::mt19937_64 rng(20240601);
  std::size_t probes = 0;
  for (const auto& s : builds) {
    if (s.assembled.lo() < 1) return {false, "frequency below 1"};
    const auto& es = s.schedule.entries();
    for (std::size_t i = 0; i + 1 < es.size(); ++i) {
      const auto& a = es[i].order;
      const auto& b = es[i + 1].order;
      if (!(3 * a.N + a.n < b.N - b.n)) return {false, "separation fails between blocks"};
    }
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      const auto& blk = es[s.terms[i].entry].block;
      if (!s.terms[i].poly.empty() && (s.terms[i].poly.lo() < blk.lo || s.terms[i].poly.hi() > blk.hi))
        return {false, "term spectrum leaves its block"};
    }
    // Complement of the blocks inside [-50, hi + 50], sampled directly:
    // minimal chaining leaves few or no gaps between blocks.
    std::vector<std::pair<std::int64_t, std::int64_t>> gaps;
    std::int64_t from = -50;
    for (const auto& e : es) {
      if (e.block.lo > from) gaps.emplace_back(from, e.block.lo - 1);
      from = std::max(from, e.block.hi + 1);
    }
    gaps.emplace_back(from, from + 49);
    std::uniform_int_distribution<std::size_t> gd(0, gaps.size() - 1);
    std::size_t off = 0;
    for (; off < 1000; ++off) {
      const auto& g = gaps[gd(rng)];
      const auto k = std::uniform_int_distribution<std::int64_t>(g.first, g.second)(rng);
      if (series_coeff(s, k) != Complex(0, 0) || s.assembled.coeff(k) != Complex(0, 0))
        return {false, "nonzero coefficient off the blocks at k=" + std::to_string(k)};
    }
    probes += off;
  }
  return {true, std::to_string(builds.size()) + " builds, " + std::to_string(probes) + " off-block probes"};
}

Outcome off_set_convergence() {
  const auto s = build_single_point(strict_single());
  const auto& es = s.schedule.entries();
  const double tail_from_2 = s.tail_after_entry(0);  // sum_{j>=2} eps_j
  const double osc_bound = tail_from_2 * (1.0 + kDecayBound / 0.5);
  std::vector<double> probes;
  for (int i = 0; i < 32; ++i) probes.push_back(0.5 + (kTwoPi - 1.0) * (i + 0.5) / 32.0);
  double worst_osc = 0.0;
  for (const auto& row : oscillation_scan(s, probes, es[1].block.lo)) worst_osc = std::max(worst_osc, row.osc);

  // Gap indices: once block j is complete, S_n differs from the value by at
  // most the budget of what is still missing.
  double worst_ratio = 0.0;
  std::vector<double> ts = probes;
  for (int i = 0; i < 256; ++i) ts.push_back(kTwoPi * i / 256.0);
  for (std::size_t j = 0; j < es.size(); ++j) {
    const std::int64_t n = j + 1 < es.size() ? es[j + 1].block.lo - 1 : es[j].block.hi;
    const double err = s.tail_after_entry(j);
    for (double t : ts) {
      const double d = std::abs(partial_sum(s.assembled, n, t) - series_value(s, t).value);
      worst_ratio = std::max(worst_ratio, d / err);
    }
  }
  const bool ok = worst_osc <= osc_bound && worst_ratio <= 1.0 && s.certified();
  return {ok, "osc " + fmt("%.3g", worst_osc) + " <= " + fmt("%.3g", osc_bound) + "; gap-index max |S-f|/err " +
                  fmt("%.3g", worst_ratio) + "; orders " + std::to_string(es[0].order.n) + "," +
                  std::to_string(es[1].order.n) + "," + std::to_string(es[2].order.n)};
}

Outcome staged_universality() {
  const auto s = build_countable(staged_countable());
  TargetFunction h;
  for (std::size_t l = 0; l < s.spec.points.size(); ++l)
    h.entries.push_back({l, std::polar(0.25, s.spec.points[l])});
  const auto rs = usearch_staged(s, h, 2);
  if (rs.size() != 2) return {false, "expected two stages"};
  std::ostringstream d;
  bool ok = rs[0].n < rs[1].n;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& r = rs[i];
    const auto N = static_cast<std::int64_t>(i + 1);
    // Recompute the errors on the full series.
    double err = 0.0;
    for (std::size_t p = 0; p < r.points.size(); ++p)
      err = std::max(err, std::abs(partial_sum(s.assembled, r.n, s.spec.points[r.points[p]]) - r.targets[p]));
    ok = ok && err < 1.0 / static_cast<double>(N) && std::abs(err - r.max_error) < 1e-12;
    // sum_{m > m_N} 4^{-m}/3 = 4^{-m_N}/9 < delta_N/3, in rationals.
    const Rational tail = Rational(1) / (Rational(9) * pow_rational(Rational(4), static_cast<int>(*r.stage_m)));
    ok = ok && tail < Rational(1, 3 * N) && r.stage_tail_exact;
    d << "stage " << N << ": m=" << *r.stage_m << " n=" << r.n << " err=" << fmt("%.3g", err) << "; ";
  }
  return {ok, d.str() + "tails exact"};
}

Outcome divergence_premises() {
  const CountableEpsRule eps{CountableEpsFamily::quarters, 1.0};
  const auto r = condition15_profile(eps, DeltaRule::exponential(), 20);
  const double r1_err = std::abs(r[0] - std::exp(1.0) / 16.0);
  const auto cover = build_cover(DeltaRule::exponential(), std::vector<double>(20, 0.0), 20);
  const double p1 = *premeasure(cover, 1.0, 1, 20).infinite_tail;
  const double ph = *premeasure(cover, 0.5, 1, 20).infinite_tail;
  const bool ok = r1_err <= 1e-12 && r[19] < 1e-3 && std::abs(p1 - 1.1640) < 1e-3 && std::abs(ph - 2.1791) < 1e-3;
  return {ok, "r_1 - e/16 = " + fmt("%.2g", r1_err) + ", r_20 = " + fmt("%.3g", r[19]) + ", tails " +
                  fmt("%.5f", p1) + " / " + fmt("%.5f", ph)};
}

Outcome cantor_property20() {
  const Rational a(2), b(5);
  const auto rep = property20_sweep(a, b, 15, 10000);
  std::int64_t certified = 0;
  for (const auto& row : rep.rows) {
    if (!row.hit_point) continue;
    const Rational unit = Rational(1) / Rational(pow3(static_cast<int>(row.N + 1)));
    const Rational& x = *row.hit_point;
    const bool canonical = x == unit || x == unit * 2;
    if (canonical && a / row.n < x && x < b / row.n && in_cantor(x)) ++certified;
  }
  const auto total = static_cast<std::int64_t>(rep.rows.size());
  const bool ok = rep.misses == 0 && certified == total && rep.disagreements == 0;
  return {ok, std::to_string(certified) + "/" + std::to_string(total) + " certified hits, " +
                  std::to_string(rep.misses) + " misses"};
}

Outcome cantor_property21() {
  const Rational a(1), b(4);
  auto zero = property21_construct(TernaryPoint::repeat(0, 8), a, b, 12);
  auto one = property21_construct(TernaryPoint::repeat(2, 8), a, b, 12);
  bool ok = zero.passed() && zero.t_n == Rational(1, 9) && zero.theta == Rational(1, 9) && one.passed() &&
            one.t_n == Rational(8, 9) && one.theta == Rational(1, 9);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<std::int64_t> nd(4, 4 * pow3(14));
  int passed = 0;
  for (int i = 0; i < 200; ++i) {
    TernaryPoint t0;
    for (int d = 0; d < 18; ++d) t0.digits.push_back(2 * bit(rng));
    const auto n = nd(rng);
    const auto r = property21_construct(t0, a, b, n);
    // Independent recheck of the three claims.
    const bool own = in_cantor(r.t_n) && in_cantor(r.t_n - r.theta) && in_cantor(r.t_n + r.theta) &&
                     a / n < r.theta && r.theta < b / n;
    passed += (r.passed() && own);
  }
  ok = ok && passed == 200;
  return {ok, "worked examples ok, " + std::to_string(passed) + "/200 random instances"};
}

Outcome rogosinski() {
  std::vector<std::pair<std::int64_t, Complex>> cs;
  for (int k = 0; k <= 40; ++k) cs.emplace_back(k, std::ldexp(1.0, -k));
  const auto p = TrigPoly::from_values(cs);
  std::vector<std::int64_t> ns;
  for (int n = 10; n <= 100; n += 10) ns.push_back(n);
  const auto probe = RogosinskiProbe::with_phase(0.0, eval(p, 0.0), ns, 1.0, 0.5, 1.5);
  bool ok = true;
  std::ostringstream d;
  for (bool symmetric : {false, true}) {
    const auto res = rogosinski_residual(p, probe, symmetric);
    for (std::size_t j = 1; j < res.size(); ++j) ok = ok && std::abs(res[j]) < std::abs(res[j - 1]);
    ok = ok && std::abs(res.back()) < 0.02;
    d << (symmetric ? "symmetric " : "plain ") << fmt("%.7f", std::abs(res.front())) << " -> "
      << fmt("%.7f", std::abs(res.back())) << (symmetric ? "" : "; ");
  }
  return {ok, d.str()};
}

std::vector<Criterion> criteria() {
  return {
      {"resonance identity", 5, resonance_identity},
      {"coefficient table", 0, coefficient_table},
      {"variation constant", 0, variation_constant},
      {"uniform boundedness", 60, uniform_boundedness},
      {"checkpoint relation", 5, checkpoint_relation},
      {"spectral discipline", 0, spectral_discipline},
      {"off-set convergence", 30, off_set_convergence},
      {"staged universality", 60, staged_universality},
      {"divergence premises", 0, divergence_premises},
      {"cantor hits", 10, cantor_property20},
      {"cantor construction", 0, cantor_property21},
      {"rogosinski residuals", 0, rogosinski},
  };
}

}  // namespace

int main() {
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria()) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      o.pass = false;
      o.detail += "; over the " + fmt("%.0f", c.budget_s) + " s budget";
    }
    std::printf("%s %2d %-22s %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
