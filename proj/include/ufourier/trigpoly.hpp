#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ufourier/rational.hpp"

namespace ufourier {

inline constexpr std::int64_t kMaxFrequency = 2147483647;  // 2^31 - 1

struct Coefficient {
  std::int64_t k = 0;
  Complex value;
  std::optional<ComplexQ> exact;  // present when the coefficient is known exactly
};

/// Sparse trigonometric polynomial sum_k c_k e^{ikt}.
///
/// Only nonzero coefficients are stored, sorted by frequency. A coefficient
/// may carry its exact rational value next to the double projection; exact
/// values survive scaling by exact factors, modulation and addition, and are
/// dropped by translations t -> t - t0 with t0 != 0.
class TrigPoly {
 public:
  TrigPoly() = default;

  static TrigPoly from_values(std::vector<std::pair<std::int64_t, Complex>> coeffs);
  static TrigPoly from_exact(std::vector<std::pair<std::int64_t, ComplexQ>> coeffs);
  static TrigPoly constant(Complex c) { return from_values({{0, c}}); }

  const std::vector<Coefficient>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Both undefined (0) for the zero polynomial.
  std::int64_t lo() const { return terms_.empty() ? 0 : terms_.front().k; }
  std::int64_t hi() const { return terms_.empty() ? 0 : terms_.back().k; }
  std::int64_t max_abs_frequency() const;

  Complex coeff(std::int64_t k) const;
  std::optional<ComplexQ> exact_coeff(std::int64_t k) const;
  bool is_exact() const;

  TrigPoly scaled(Complex s) const;
  TrigPoly scaled(const ComplexQ& s) const;
  // Multiplication by e^{i shift t}.
  TrigPoly modulated(std::int64_t shift) const;
  // t -> p(t - t0).
  TrigPoly translated(double t0) const;

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
  TrigPoly& operator+=(const TrigPoly& other) { return *this = *this + other; }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b);

 private:
  explicit TrigPoly(std::vector<Coefficient> sorted_nonzero) : terms_(std::move(sorted_nonzero)) {}
  static void check_frequency(std::int64_t k);

  std::vector<Coefficient> terms_;
};

Complex eval(const TrigPoly& p, double t);

// S_n(p, t): stored frequencies with |k| <= n.
Complex partial_sum(const TrigPoly& p, std::int64_t n, double t);

// sigma_n = (S_0 + ... + S_n) / (n + 1), via the Fejer weights 1 - |k|/(n+1).
Complex cesaro_mean(const TrigPoly& p, std::int64_t n, double t);

// Grid lower bound for sup |p| on t_i = 2*pi*i/grid_points, by direct
// summation. Hermitian coefficient sets are summed as real values; a real
// even polynomial only needs half the grid.
double sup_norm_estimate(const TrigPoly& p, std::int64_t grid_points);
// True when grid_points < 2 * (hi - lo + 1).
bool grid_undersampled(const TrigPoly& p, std::int64_t grid_points);

// sum_{m=lo}^{hi+1} |c(m-1) - c(m)|.
double coeff_total_variation(const TrigPoly& p);
// Same in exact arithmetic; only defined when every coefficient is exact and
// all of them lie on one axis (all real or all imaginary).
std::optional<Rational> exact_coeff_total_variation(const TrigPoly& p);

// S_n(p, 0) exactly, when all coefficients are exact.
std::optional<ComplexQ> exact_partial_sum_at_zero(const TrigPoly& p, std::int64_t n);

/// All partial sums S_n(p, t) for a fixed t. Built once in O(size), then
/// each query is a binary search.
class PartialSumProfile {
 public:
  PartialSumProfile(const TrigPoly& p, double t);

  Complex at(std::int64_t n) const;
  // Distinct |k| values where S_n changes, ascending.
  const std::vector<std::int64_t>& breakpoints() const { return abs_k_; }
  // cumulative()[i] = S_n for breakpoints()[i] <= n < breakpoints()[i+1].
  const std::vector<Complex>& cumulative() const { return sums_; }

 private:
  std::vector<std::int64_t> abs_k_;
  std::vector<Complex> sums_;
};

}  // namespace ufourier
