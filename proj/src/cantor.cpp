#include "ufourier/cantor.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ufourier/errors.hpp"

namespace ufourier {

std::int64_t pow3(int d) {
  if (d < 0 || d > kMaxCantorDepth)
    throw QuotaError("cantor: depth " + std::to_string(d) + " outside [0, " + std::to_string(kMaxCantorDepth) + "]");
  std::int64_t p = 1;
  for (int i = 0; i < d; ++i) p *= 3;
  return p;
}

CantorStage::CantorStage(int depth) : depth_(depth) {
  pow3(depth);  // range check
  if (depth > kMaxEnumeratedDepth)
    throw QuotaError("CantorStage: enumerating 2^" + std::to_string(depth) + " intervals exceeds the cap 2^" +
                     std::to_string(kMaxEnumeratedDepth));
  intervals_.push_back({0, 1});
  for (int d = 0; d < depth; ++d) {
    std::vector<TernaryInterval> next;
    next.reserve(intervals_.size() * 2);
    for (const auto& iv : intervals_) {
      next.push_back({3 * iv.lo, 3 * iv.lo + 1});
      next.push_back({3 * iv.lo + 2, 3 * iv.lo + 3});
    }
    intervals_ = std::move(next);
  }
}

Rational CantorStage::lo(std::size_t i) const { return Rational(intervals_.at(i).lo, denominator()); }
Rational CantorStage::hi(std::size_t i) const { return Rational(intervals_.at(i).hi, denominator()); }

TernaryPoint TernaryPoint::repeat(int digit, std::size_t depth) {
  if (digit != 0 && digit != 2) throw InvalidArgument("TernaryPoint: digits must be 0 or 2");
  return TernaryPoint{std::vector<int>(depth, digit)};
}

Rational TernaryPoint::stage_left(std::size_t d) const {
  if (d > digits.size()) throw PrefixTooShort("TernaryPoint: prefix has " + std::to_string(digits.size()) +
                                              " digits, stage " + std::to_string(d) + " requested");
  BigInt num = 0;
  BigInt den = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (digits[i] != 0 && digits[i] != 2) throw InvalidArgument("TernaryPoint: digits must be 0 or 2");
    num = num * 3 + digits[i];
    den *= 3;
  }
  return Rational(num, den);
}

Rational TernaryPoint::value() const { return stage_left(digits.size()); }

namespace {

bool hits(const Rational& lo, const Rational& hi, const BigInt& a, const BigInt& den, int d, int depth) {
  const Rational left(a, den);
  const Rational right(a + 1, den);
  if (hi < left || lo > right) return false;
  if (d == depth) return true;
  // The whole stage-d interval is inside [lo, hi]; it carries stage-D points.
  if (lo <= left && right <= hi) return true;
  const BigInt den3 = den * 3;
  return hits(lo, hi, a * 3, den3, d + 1, depth) || hits(lo, hi, a * 3 + 2, den3, d + 1, depth);
}

}  // namespace

bool interval_hits_cantor(const Rational& lo, const Rational& hi, int depth) {
  if (lo > hi) throw InvalidArgument("interval_hits_cantor: lo > hi");
  pow3(depth);
  return hits(lo, hi, BigInt(0), BigInt(1), 0, depth);
}

bool in_cantor(const Rational& x) {
  if (x < 0 || x > 1) return false;
  std::set<Rational> seen;
  Rational y = x;
  while (true) {
    if (y == 0 || y == 1) return true;
    if (!seen.insert(y).second) return true;  // periodic with digits 0/2 only
    y *= 3;
    if (y <= 1) continue;
    if (y >= 2) {
      y -= 2;
      continue;
    }
    return false;
  }
}

namespace {

// Largest N with 3^N <= q (q > 0), possibly negative.
std::int64_t floor_log3(const Rational& q) {
  std::int64_t N = 0;
  Rational p(1);
  while (p > q) {
    p /= 3;
    --N;
  }
  while (p * 3 <= q) {
    p *= 3;
    ++N;
  }
  return N;
}

}  // namespace

Property20Report property20_sweep(const Rational& a, const Rational& b, std::int64_t n_min, std::int64_t n_max) {
  if (!(a > 0 && a < b)) throw InvalidArgument("property20_sweep: need 0 < a < b");
  if (n_min < 1 || n_max < n_min) throw InvalidArgument("property20_sweep: need 1 <= n_min <= n_max");
  Property20Report rep;
  rep.rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    Property20Row row;
    row.n = n;
    const Rational lo = a / n;
    const Rational hi = b / n;
    row.N = floor_log3(Rational(n) / b);
    const Rational unit = pow_rational(Rational(1, 3), static_cast<int>(row.N + 1));
    for (const Rational& p : {unit, Rational(unit * 2)}) {
      if (lo < p && p < hi) {
        row.hit_point = p;
        break;
      }
    }
    row.hit = row.hit_point.has_value();
    row.interval_hit = interval_hits_cantor(lo, hi, static_cast<int>(std::max<std::int64_t>(row.N + 2, 0)));
    row.agree = row.hit == row.interval_hit;
    rep.hits += row.hit ? 1 : 0;
    rep.misses += row.hit ? 0 : 1;
    rep.disagreements += row.agree ? 0 : 1;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Property21Result property21_construct(const TernaryPoint& t0, const Rational& a, const Rational& b, std::int64_t n) {
  if (!(a > 0 && b > a * 3)) throw InvalidArgument("property21_construct: need a > 0 and b/a > 3");
  if (Rational(n) < b) throw InvalidArgument("property21_construct: need n >= b");
  Property21Result r;
  r.N = floor_log3(Rational(n) / b);
  const auto N = static_cast<std::size_t>(r.N);
  if (t0.depth() < N + 1)
    throw PrefixTooShort("property21_construct: stage " + std::to_string(N + 1) + " needs " +
                         std::to_string(N + 1) + " digits, prefix has " + std::to_string(t0.depth()));
  r.theta = pow_rational(Rational(1, 3), static_cast<int>(N + 1));
  r.interval_lo = t0.stage_left(N);
  r.interval_hi = r.interval_lo + r.theta * 3;
  const int digit = t0.digits[N];
  if (digit != 0 && digit != 2) throw InvalidArgument("TernaryPoint: digits must be 0 or 2");
  r.lower_half = digit == 0;
  // Inner endpoint of the half that holds t0.
  r.t_n = r.interval_lo + (r.lower_half ? r.theta : r.theta * 2);
  r.t_n_in_cantor = in_cantor(r.t_n);
  r.neighbours_in_cantor = in_cantor(r.t_n - r.theta) && in_cantor(r.t_n + r.theta);
  r.theta_window = a / n < r.theta && r.theta < b / n;
  return r;
}

std::vector<RationalInterval> symmetric_double(int depth) {
  if (depth < 0) throw InvalidArgument("symmetric_double: depth must be >= 0");
  const CantorStage stage(depth);
  std::vector<RationalInterval> out;
  out.reserve(stage.intervals().size() * 2);
  for (std::size_t i = 0; i < stage.intervals().size(); ++i) {
    out.push_back({stage.lo(i), stage.hi(i)});
    out.push_back({-stage.hi(i), -stage.lo(i)});
  }
  std::sort(out.begin(), out.end(), [](const RationalInterval& x, const RationalInterval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  return out;
}

}  // namespace ufourier
