#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "ufourier/rational.hpp"
#include "ufourier/trigpoly.hpp"

namespace ufourier {

// Calibrated constants for the Fejer family.
inline constexpr double kSupBound = 3.704;        // 2 Si(pi) = 3.70387...
inline constexpr double kVariationBound = 4.0;    // exact total variation of Q_{N,n}
inline constexpr double kDecayBound = 8.0;       // max_k |S_k(Q, t)| |t| over the validated sweep
inline constexpr double kDefaultKappa = 8.0;      // max of the three
inline constexpr std::int64_t kDefaultOrderCap = 10'000'000;
// Past this order H_n's denominator gets unwieldy; scaled blocks switch to doubles.
inline constexpr std::int64_t kExactOrderLimit = 512;

struct FejerOrder {
  std::int64_t N = 2;
  std::int64_t n = 1;

  FejerOrder() = default;
  // Throws InvalidArgument unless N > n >= 1.
  FejerOrder(std::int64_t big_n, std::int64_t small_n);
};

enum class CertMode { strict, relaxed };

struct ScaledFejerSpec {
  FejerOrder order;
  ComplexQ target;  // the value c
  double eps = 1.0;
  CertMode mode = CertMode::relaxed;
  double kappa = kDefaultKappa;
};

struct Resonance {
  std::optional<Rational> exact;  // only for n <= kExactOrderLimit
  double value = 0.0;
};

// Q_{N,n}(t) = 2 sin(Nt) sum_{k=1}^n sin(kt)/k, with exact coefficients
// +1/(2k) at +-(N-k) and -1/(2k) at +-(N+k).
TrigPoly fejer_coeffs(const FejerOrder& order);

// S_N(Q_{N,n}, 0) = H_n.
Resonance fejer_resonance(const FejerOrder& order);

// Kahan-compensated H_n in double.
double harmonic_value(std::int64_t n);

// P_{N,n} = (c / H_n) Q_{N,n}. Exact when the target is and n <= kExactOrderLimit.
// Strict mode throws InvalidArgument unless H_n >= kappa |c| / eps, which
// certifies the sup bound, the variation bound and the |S_k| <= eps/|t| decay.
TrigPoly scaled_fejer(const ScaledFejerSpec& spec);

// Smallest n with H_n >= kappa |c| / eps (1 when c == 0). QuotaError past cap.
std::int64_t pick_order(Complex c, double eps, double kappa = kDefaultKappa,
                        std::int64_t cap = kDefaultOrderCap);

// max over samples and 0 <= k <= k_max of |S_k(Q_{N,n}, t)| * |t reduced to (-pi, pi]|.
double decay_calibrate(const FejerOrder& order, std::span<const double> t_samples, std::int64_t k_max);

}  // namespace ufourier
