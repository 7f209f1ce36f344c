#include "ufourier/fejer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "ufourier/errors.hpp"
#include "ufourier/phase.hpp"

namespace ufourier {

FejerOrder::FejerOrder(std::int64_t big_n, std::int64_t small_n) : N(big_n), n(small_n) {
  if (small_n < 1 || big_n <= small_n)
    throw InvalidArgument("FejerOrder: need N > n >= 1, got N=" + std::to_string(big_n) +
                          ", n=" + std::to_string(small_n));
  if (big_n + small_n > kMaxFrequency) throw QuotaError("FejerOrder: N + n exceeds 2^31-1");
}

TrigPoly fejer_coeffs(const FejerOrder& order) {
  const std::int64_t N = order.N, n = order.n;
  std::vector<ComplexQ> pos, neg;
  pos.reserve(static_cast<std::size_t>(n));
  neg.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    pos.emplace_back(Rational(1, 2 * k));
    neg.emplace_back(Rational(-1, 2 * k));
  }
  // Emitted in increasing frequency.
  std::vector<std::pair<std::int64_t, ComplexQ>> coeffs;
  coeffs.reserve(static_cast<std::size_t>(4 * n));
  for (std::int64_t k = n; k >= 1; --k) coeffs.emplace_back(-(N + k), neg[k - 1]);
  for (std::int64_t k = 1; k <= n; ++k) coeffs.emplace_back(-(N - k), pos[k - 1]);
  for (std::int64_t k = n; k >= 1; --k) coeffs.emplace_back(N - k, pos[k - 1]);
  for (std::int64_t k = 1; k <= n; ++k) coeffs.emplace_back(N + k, std::move(neg[k - 1]));
  return TrigPoly::from_exact(std::move(coeffs));
}

double harmonic_value(std::int64_t n) {
  double sum = 0.0, comp = 0.0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double y = 1.0 / static_cast<double>(k) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Resonance fejer_resonance(const FejerOrder& order) {
  if (order.n > kExactOrderLimit) return {std::nullopt, harmonic_value(order.n)};
  Rational h = harmonic_exact(order.n);
  double v = to_double(h);
  return {std::move(h), v};
}

TrigPoly scaled_fejer(const ScaledFejerSpec& spec) {
  if (!(spec.eps > 0.0)) throw InvalidArgument("scaled_fejer: eps must be positive");
  if (spec.target.is_zero()) return {};
  const Resonance h = fejer_resonance(spec.order);
  if (spec.mode == CertMode::strict) {
    const double need = spec.kappa * std::abs(spec.target.to_complex()) / spec.eps;
    if (h.value < need) {
      std::ostringstream msg;
      msg << "scaled_fejer: strict certification failed, H_" << spec.order.n << " = " << h.value
          << " < kappa|c|/eps = " << need;
      throw InvalidArgument(msg.str());
    }
  }
  if (h.exact) return fejer_coeffs(spec.order).scaled(spec.target / *h.exact);
  const Complex s = spec.target.to_complex() / h.value;
  const std::int64_t N = spec.order.N;
  std::vector<std::pair<std::int64_t, Complex>> coeffs;
  coeffs.reserve(static_cast<std::size_t>(4 * spec.order.n));
  for (std::int64_t k = 1; k <= spec.order.n; ++k) {
    const Complex c = s / (2.0 * static_cast<double>(k));
    coeffs.emplace_back(N - k, c);
    coeffs.emplace_back(-(N - k), c);
    coeffs.emplace_back(N + k, -c);
    coeffs.emplace_back(-(N + k), -c);
  }
  return TrigPoly::from_values(std::move(coeffs));
}

std::int64_t pick_order(Complex c, double eps, double kappa, std::int64_t cap) {
  if (!(eps > 0.0) || !(kappa > 0.0)) throw InvalidArgument("pick_order: eps and kappa must be positive");
  const double threshold = kappa * std::abs(c) / eps;
  if (threshold <= 1.0) return 1;
  double sum = 0.0, comp = 0.0;
  for (std::int64_t n = 1; n <= cap; ++n) {
    const double y = 1.0 / static_cast<double>(n) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (sum >= threshold) return n;
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "pick_order: need H_n >= " << threshold << ", beyond the order cap " << cap;
  throw QuotaError(msg.str());
}

double decay_calibrate(const FejerOrder& order, std::span<const double> t_samples, std::int64_t k_max) {
  if (k_max < 0) throw InvalidArgument("decay_calibrate: k_max must be nonnegative");
  const TrigPoly q = fejer_coeffs(order);
  double best = 0.0;
  for (double t : t_samples) {
    const double tr = std::abs(reduce_angle(t));
    if (tr == 0.0) throw InvalidArgument("decay_calibrate: sample angle is 0 mod 2pi");
    const PartialSumProfile profile(q, t);
    // S_k is piecewise constant in k; its values on [0, k_max] are S_0 and the
    // cumulative sums at breakpoints <= k_max.
    double m = std::abs(profile.at(0));
    const auto& bps = profile.breakpoints();
    for (std::size_t i = 0; i < bps.size() && bps[i] <= k_max; ++i)
      m = std::max(m, std::abs(profile.cumulative()[i]));
    best = std::max(best, m * tr);
  }
  return best;
}

}  // namespace ufourier
