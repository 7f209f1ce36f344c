#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ufourier/rational.hpp"

namespace ufourier {

// Largest depth with 3^D <= 2^63.
inline constexpr int kMaxCantorDepth = 39;
// Stage enumeration stores 2^D intervals.
inline constexpr int kMaxEnumeratedDepth = 24;

// Closed interval [lo, hi] / 3^depth.
struct TernaryInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const TernaryInterval&, const TernaryInterval&) = default;
};

std::int64_t pow3(int d);

/// Stage D of the ternary construction on [0, 1]: 2^D closed intervals of
/// length 3^{-D}, sorted, with integer endpoints over 3^D.
class CantorStage {
 public:
  explicit CantorStage(int depth);

  int depth() const { return depth_; }
  std::int64_t denominator() const { return pow3(depth_); }
  const std::vector<TernaryInterval>& intervals() const { return intervals_; }
  Rational lo(std::size_t i) const;
  Rational hi(std::size_t i) const;

 private:
  int depth_;
  std::vector<TernaryInterval> intervals_;
};

// Finite digit prefix over {0, 2}.
struct TernaryPoint {
  std::vector<int> digits;

  static TernaryPoint repeat(int digit, std::size_t depth);
  std::size_t depth() const { return digits.size(); }
  // sum d_i 3^{-i} over the prefix.
  Rational value() const;
  // Left endpoint of the stage-d interval selected by the first d digits.
  Rational stage_left(std::size_t d) const;
};

// True iff [lo, hi] meets the stage-D set.
bool interval_hits_cantor(const Rational& lo, const Rational& hi, int depth);

// Exact membership of a rational in C (periodic ternary expansion).
bool in_cantor(const Rational& x);

struct Property20Row {
  std::int64_t n = 0;
  std::int64_t N = 0;                    // 3^N <= n/b < 3^{N+1}
  std::optional<Rational> hit_point;    // 1/3^{N+1} or 2/3^{N+1} inside (a/n, b/n)
  bool hit = false;
  bool interval_hit = false;            // [a/n, b/n] meets the stage-(N+2) set
  bool agree = false;
};

struct Property20Report {
  std::vector<Property20Row> rows;
  std::int64_t hits = 0;
  std::int64_t misses = 0;
  std::int64_t disagreements = 0;
};

Property20Report property20_sweep(const Rational& a, const Rational& b, std::int64_t n_min, std::int64_t n_max);

struct Property21Result {
  std::int64_t N = 0;
  Rational interval_lo;  // I_N
  Rational interval_hi;
  bool lower_half = true;  // t0 in I_{N,-}
  Rational t_n;
  Rational theta;
  bool t_n_in_cantor = false;
  bool neighbours_in_cantor = false;  // t_n - theta and t_n + theta
  bool theta_window = false;          // a/n < theta < b/n
  bool passed() const { return t_n_in_cantor && neighbours_in_cantor && theta_window; }
};

// N from 3^N b <= n < 3^{N+1} b. Needs b/a > 3 and at least N+1 digits
// (PrefixTooShort otherwise).
Property21Result property21_construct(const TernaryPoint& t0, const Rational& a, const Rational& b, std::int64_t n);

struct RationalInterval {
  Rational lo;
  Rational hi;
};

// Stage-D intervals of C and of -C, sorted.
std::vector<RationalInterval> symmetric_double(int depth);

}  // namespace ufourier
