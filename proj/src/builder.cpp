#include "ufourier/builder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ufourier/errors.hpp"
#include "ufourier/phase.hpp"

namespace ufourier {

// ---------------------------------------------------------------------------
// Budget rules

double FiniteEpsRule::eps(std::int64_t j) const { return std::ldexp(scale, -static_cast<int>(j)); }

double FiniteEpsRule::tail(std::int64_t J) const { return std::ldexp(scale, -static_cast<int>(J)); }

Rational FiniteEpsRule::exact_tail(std::int64_t J) const {
  return exact_rational(scale) * pow_rational(Rational(1, 2), static_cast<int>(J));
}

double CountableEpsRule::eps(std::int64_t m, std::int64_t j) const {
  const int e = static_cast<int>(m + j);
  switch (family) {
    case CountableEpsFamily::halves:
      return std::ldexp(scale, -e);
    case CountableEpsFamily::quarters:
      return std::ldexp(scale, -2 * e);
    case CountableEpsFamily::quarters_gauss:
      return std::ldexp(scale, -2 * e) * std::exp(-static_cast<double>(m) * static_cast<double>(m));
  }
  return 0.0;
}

double CountableEpsRule::row(std::int64_t m) const {
  const int e = static_cast<int>(m);
  switch (family) {
    case CountableEpsFamily::halves:
      return std::ldexp(scale, -e);
    case CountableEpsFamily::quarters:
      return std::ldexp(scale, -2 * e) / 3.0;
    case CountableEpsFamily::quarters_gauss:
      return std::ldexp(scale, -2 * e) / 3.0 * std::exp(-static_cast<double>(m) * static_cast<double>(m));
  }
  return 0.0;
}

double CountableEpsRule::row_tail(std::int64_t M) const {
  switch (family) {
    case CountableEpsFamily::halves:
      return std::ldexp(scale, -static_cast<int>(M));
    case CountableEpsFamily::quarters:
      return std::ldexp(scale, -2 * static_cast<int>(M)) / 9.0;
    case CountableEpsFamily::quarters_gauss: {
      // Terms fall faster than geometrically; stop once they no longer move the sum.
      double sum = 0.0;
      for (std::int64_t m = M + 1;; ++m) {
        const double r = row(m);
        if (r == 0.0 || r <= sum * 1e-18) break;
        sum += r;
      }
      return sum;
    }
  }
  return 0.0;
}

std::optional<Rational> CountableEpsRule::exact_eps(std::int64_t m, std::int64_t j) const {
  const int e = static_cast<int>(m + j);
  switch (family) {
    case CountableEpsFamily::halves:
      return exact_rational(scale) * pow_rational(Rational(1, 2), e);
    case CountableEpsFamily::quarters:
      return exact_rational(scale) * pow_rational(Rational(1, 4), e);
    case CountableEpsFamily::quarters_gauss:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Rational> CountableEpsRule::exact_row_tail(std::int64_t M) const {
  const int e = static_cast<int>(M);
  switch (family) {
    case CountableEpsFamily::halves:
      return exact_rational(scale) * pow_rational(Rational(1, 2), e);
    case CountableEpsFamily::quarters:
      return exact_rational(scale) * pow_rational(Rational(1, 4), e) / Rational(9);
    case CountableEpsFamily::quarters_gauss:
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// UniversalSeries accessors

double UniversalSeries::tail_after_entry(std::size_t entry) const {
  double sum = tail_bound;
  for (std::size_t i = entry + 1; i < entry_eps.size(); ++i) sum += entry_eps[i];
  return sum;
}

std::vector<const SeriesTerm*> UniversalSeries::entry_terms(std::size_t entry) const {
  std::vector<const SeriesTerm*> out;
  for (const auto& t : terms)
    if (t.entry == entry) out.push_back(&t);
  return out;
}

Complex UniversalSeries::component_value(std::size_t point, double t, std::optional<std::int64_t> m) const {
  Complex sum{};
  for (const auto& term : terms) {
    if (term.point != point) continue;
    if (m && term.label.m != m) continue;
    sum += eval(term.poly, t);
  }
  return sum;
}

Complex UniversalSeries::row_value(std::int64_t m, double t) const {
  Complex sum{};
  for (std::size_t i = 0; i < schedule.size(); ++i)
    if (schedule[i].label.m == m) sum += eval(entry_polys[i], t);
  return sum;
}

// ---------------------------------------------------------------------------
// Dense enumeration

namespace {

constexpr unsigned __int128 kSaturate = static_cast<unsigned __int128>(1) << 100;

unsigned __int128 saturating_pow(unsigned __int128 base, std::int64_t exp) {
  unsigned __int128 r = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > kSaturate) return kSaturate;
  }
  return r;
}

}  // namespace

std::vector<ComplexQ> dense_point(std::int64_t index, std::int64_t dim) {
  if (index < 1) throw InvalidArgument("dense_point: index must be >= 1");
  if (dim < 1) throw InvalidArgument("dense_point: dim must be >= 1");
  auto offset = static_cast<unsigned __int128>(index - 1);
  for (std::int64_t r = 0; r < 60; ++r) {
    const std::int64_t half = r << r;  // r * 2^r
    const auto radix = static_cast<unsigned __int128>(2 * half + 1);
    const auto count = saturating_pow(radix, 2 * dim);
    if (offset >= count) {
      offset -= count;
      continue;
    }
    std::vector<std::int64_t> digits(static_cast<std::size_t>(2 * dim));
    for (auto d = digits.rbegin(); d != digits.rend(); ++d) {
      *d = static_cast<std::int64_t>(offset % radix) - half;
      offset /= radix;
    }
    const Rational denom(BigInt(1) << r);
    std::vector<ComplexQ> out;
    out.reserve(static_cast<std::size_t>(dim));
    for (std::int64_t c = 0; c < dim; ++c)
      out.emplace_back(Rational(digits[static_cast<std::size_t>(2 * c)]) / denom,
                       Rational(digits[static_cast<std::size_t>(2 * c + 1)]) / denom);
    return out;
  }
  throw QuotaError("dense_point: index beyond the enumerated levels");
}

// ---------------------------------------------------------------------------
// Builders

namespace {

void validate_points(const std::vector<double>& points) {
  if (points.empty()) throw InvalidArgument("series spec: at least one point required");
  for (double t : points)
    if (!std::isfinite(t)) throw InvalidArgument("series spec: non-finite point");
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b)
      if (std::abs(reduce_angle(points[a] - points[b])) < 1e-12)
        throw InvalidArgument("series spec: points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                              " coincide mod 2pi");
}

void validate_common(const SeriesSpec& spec) {
  validate_points(spec.points);
  if (spec.truncation < 1) throw InvalidArgument("series spec: truncation must be >= 1");
  if (spec.relaxed_orders.empty()) throw InvalidArgument("series spec: relaxed_orders must be nonempty");
  for (auto n : spec.relaxed_orders)
    if (n < 1) throw InvalidArgument("series spec: relaxed orders must be >= 1");
  if (!std::isfinite(spec.targets.scale)) throw InvalidArgument("series spec: target scale must be finite");
  if (!(spec.kappa > 0.0)) throw InvalidArgument("series spec: kappa must be positive");
  if (spec.margin < 0) throw InvalidArgument("series spec: margin must be nonnegative");
}

std::int64_t relaxed_order(const SeriesSpec& spec, std::int64_t j) {
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(j), spec.relaxed_orders.size()) - 1;
  return spec.relaxed_orders[idx];
}

std::vector<ComplexQ> block_targets(const SeriesSpec& spec, std::int64_t j, std::int64_t dim) {
  const auto& ex = spec.targets.explicit_targets;
  if (static_cast<std::size_t>(j) <= ex.size()) {
    const auto& row = ex[static_cast<std::size_t>(j - 1)];
    if (static_cast<std::int64_t>(row.size()) != dim)
      throw InvalidArgument("series spec: explicit target row " + std::to_string(j) + " has wrong dimension");
    std::vector<ComplexQ> out;
    for (const auto& z : row) out.push_back(exact_complex(z));
    return out;
  }
  auto pts = dense_point(j, dim);
  const Rational s = exact_rational(spec.targets.scale);
  for (auto& z : pts) z = z * s;
  return pts;
}

std::int64_t choose_order(const SeriesSpec& spec, const std::vector<ComplexQ>& targets, double eps,
                          std::int64_t j) {
  if (spec.mode == CertMode::relaxed) return relaxed_order(spec, j);
  double biggest = 0.0;
  for (const auto& c : targets) biggest = std::max(biggest, std::abs(c.to_complex()));
  // The modulated block carries 2c (its one-sided resonance is half of H_n).
  return pick_order(Complex(2.0 * biggest, 0.0), eps, spec.kappa, spec.order_cap);
}

// Appends entry + its per-point terms to the series under construction.
void add_entry(UniversalSeries& s, std::vector<ScheduleEntry>& entries, BlockLabel label, std::int64_t& prev_hi,
               const std::vector<ComplexQ>& targets, double eps, std::int64_t n) {
  const auto& spec = s.spec;
  const auto nb = next_block(prev_hi, n, spec.margin, spec.freq_cap);
  const FejerOrder order(nb.N, n);
  const std::size_t entry = entries.size();
  entries.push_back({label, order, 2 * nb.N, nb.block});
  prev_hi = nb.block.hi;

  TrigPoly entry_poly;
  Checkpoint cp{entry, label, 3 * nb.N, {}, {}};
  for (std::size_t l = 0; l < targets.size(); ++l) {
    ScaledFejerSpec fs{order, targets[l] * Rational(2), eps, spec.mode, spec.kappa};
    TrigPoly p = scaled_fejer(fs).modulated(2 * nb.N).translated(spec.points[l]);
    entry_poly += p;
    s.terms.push_back({entry, label, l, targets[l], targets[l].to_complex(), std::move(p)});
    cp.points.push_back(l);
    cp.expected.push_back(targets[l].to_complex());
  }
  s.entry_eps.push_back(eps);
  s.assembled += entry_poly;
  s.entry_polys.push_back(std::move(entry_poly));
  s.checkpoints.push_back(std::move(cp));
}

}  // namespace

UniversalSeries build_finite(const SeriesSpec& spec) {
  validate_common(spec);
  if (!(spec.finite_eps.scale > 0.0)) throw InvalidArgument("series spec: eps scale must be positive");
  UniversalSeries s;
  s.kind = spec.points.size() == 1 ? SeriesKind::single_point : SeriesKind::finite;
  s.spec = spec;
  const auto dim = static_cast<std::int64_t>(spec.points.size());
  std::vector<ScheduleEntry> entries;
  std::int64_t prev_hi = kNoPredecessor;
  for (std::int64_t j = 1; j <= spec.truncation; ++j) {
    const auto targets = block_targets(spec, j, dim);
    const double eps = spec.finite_eps.eps(j);
    add_entry(s, entries, {std::nullopt, j}, prev_hi, targets, eps, choose_order(spec, targets, eps, j));
  }
  s.schedule = BlockSchedule(std::move(entries));
  s.tail_bound = spec.finite_eps.tail(spec.truncation);
  return s;
}

UniversalSeries build_single_point(const SeriesSpec& spec) {
  if (spec.points.size() != 1) throw InvalidArgument("build_single_point: exactly one point required");
  return build_finite(spec);
}

UniversalSeries build_countable(const SeriesSpec& spec) {
  validate_common(spec);
  if (!(spec.countable_eps.scale > 0.0)) throw InvalidArgument("series spec: eps scale must be positive");
  if (!spec.targets.explicit_targets.empty())
    throw InvalidArgument("build_countable: explicit targets are not supported; use the dense streams");
  UniversalSeries s;
  s.kind = SeriesKind::countable;
  s.spec = spec;
  const auto max_m = static_cast<std::int64_t>(spec.points.size());
  const auto& rule = spec.countable_eps;

  std::vector<ScheduleEntry> entries;
  std::int64_t prev_hi = kNoPredecessor;
  std::optional<Rational> included_exact = Rational(0);
  double included = 0.0;
  for (const auto& label : diagonal_labels(spec.truncation)) {
    const std::int64_t m = *label.m;
    if (m > max_m) continue;
    auto targets = dense_point(label.j, m);
    const Rational sc = exact_rational(spec.targets.scale);
    for (auto& z : targets) z = z * sc;
    const double eps = rule.eps(m, label.j);
    add_entry(s, entries, label, prev_hi, targets, eps, choose_order(spec, targets, eps, label.j));
    included += eps;
    if (auto e = rule.exact_eps(m, label.j); e && included_exact)
      *included_exact += *e;
    else
      included_exact.reset();
  }
  s.schedule = BlockSchedule(std::move(entries));
  auto total_exact = rule.exact_row_tail(0);
  if (total_exact && included_exact)
    s.tail_bound = to_double(*total_exact - *included_exact);
  else
    s.tail_bound = std::max(0.0, rule.total() - included);
  return s;
}

UniversalSeries build_series(SeriesKind kind, const SeriesSpec& spec) {
  switch (kind) {
    case SeriesKind::single_point:
      return build_single_point(spec);
    case SeriesKind::finite:
      return build_finite(spec);
    case SeriesKind::countable:
      return build_countable(spec);
  }
  throw InvalidArgument("build_series: unknown kind");
}

Complex series_coeff(const UniversalSeries& s, std::int64_t k) {
  if (k < 0) return {};
  auto entry = s.schedule.find_block(k);
  if (!entry) return {};
  return s.entry_polys[*entry].coeff(k);
}

SeriesValue series_value(const UniversalSeries& s, double t) {
  SeriesValue v;
  v.value = eval(s.assembled, t);
  if (s.certified()) v.err = s.tail_bound;
  return v;
}

}  // namespace ufourier
