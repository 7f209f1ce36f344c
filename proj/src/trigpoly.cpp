#include "ufourier/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ufourier/errors.hpp"
#include "ufourier/phase.hpp"

namespace ufourier {

namespace {

bool coefficient_is_zero(const Coefficient& c) {
  return c.exact ? c.exact->is_zero() : (c.value == Complex{});
}

std::vector<Coefficient> normalise(std::vector<Coefficient> raw) {
  auto by_k = [](const auto& a, const auto& b) { return a.k < b.k; };
  if (!std::is_sorted(raw.begin(), raw.end(), by_k)) std::stable_sort(raw.begin(), raw.end(), by_k);
  std::vector<Coefficient> out;
  out.reserve(raw.size());
  for (auto& c : raw) {
    if (!out.empty() && out.back().k == c.k) {
      auto& last = out.back();
      if (last.exact && c.exact) {
        last.exact = *last.exact + *c.exact;
        last.value = last.exact->to_complex();
      } else {
        last.exact.reset();
        last.value += c.value;
      }
    } else {
      out.push_back(std::move(c));
    }
  }
  std::erase_if(out, coefficient_is_zero);
  return out;
}

// Neumaier summation, per component. Terms that cancel exactly sum to 0.
class CompensatedSum {
 public:
  void add(Complex z) {
    step(re_, cre_, z.real());
    step(im_, cim_, z.imag());
  }
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  static void step(double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

}  // namespace

void TrigPoly::check_frequency(std::int64_t k) {
  if (k > kMaxFrequency || k < -kMaxFrequency)
    throw QuotaError("frequency " + std::to_string(k) + " exceeds 2^31-1");
}

TrigPoly TrigPoly::from_values(std::vector<std::pair<std::int64_t, Complex>> coeffs) {
  std::vector<Coefficient> raw;
  raw.reserve(coeffs.size());
  for (auto& [k, v] : coeffs) {
    check_frequency(k);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InvalidArgument("TrigPoly: non-finite coefficient at k=" + std::to_string(k));
    raw.push_back({k, v, std::nullopt});
  }
  return TrigPoly(normalise(std::move(raw)));
}

TrigPoly TrigPoly::from_exact(std::vector<std::pair<std::int64_t, ComplexQ>> coeffs) {
  std::vector<Coefficient> raw;
  raw.reserve(coeffs.size());
  for (auto& [k, v] : coeffs) {
    check_frequency(k);
    raw.push_back({k, v.to_complex(), std::move(v)});
  }
  return TrigPoly(normalise(std::move(raw)));
}

std::int64_t TrigPoly::max_abs_frequency() const {
  if (terms_.empty()) return 0;
  return std::max(std::llabs(terms_.front().k), std::llabs(terms_.back().k));
}

Complex TrigPoly::coeff(std::int64_t k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Coefficient& c, std::int64_t key) { return c.k < key; });
  return (it != terms_.end() && it->k == k) ? it->value : Complex{};
}

std::optional<ComplexQ> TrigPoly::exact_coeff(std::int64_t k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Coefficient& c, std::int64_t key) { return c.k < key; });
  if (it == terms_.end() || it->k != k) return ComplexQ{};
  return it->exact;
}

bool TrigPoly::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Coefficient& c) { return c.exact.has_value(); });
}

TrigPoly TrigPoly::scaled(Complex s) const {
  std::vector<Coefficient> out;
  out.reserve(terms_.size());
  for (const auto& c : terms_) out.push_back({c.k, c.value * s, std::nullopt});
  return TrigPoly(normalise(std::move(out)));
}

TrigPoly TrigPoly::scaled(const ComplexQ& s) const {
  std::vector<Coefficient> out;
  out.reserve(terms_.size());
  const Complex sd = s.to_complex();
  for (const auto& c : terms_) {
    if (c.exact) {
      ComplexQ v = *c.exact * s;
      out.push_back({c.k, v.to_complex(), std::move(v)});
    } else {
      out.push_back({c.k, c.value * sd, std::nullopt});
    }
  }
  return TrigPoly(normalise(std::move(out)));
}

TrigPoly TrigPoly::modulated(std::int64_t shift) const {
  std::vector<Coefficient> out = terms_;
  for (auto& c : out) {
    c.k += shift;
    check_frequency(c.k);
  }
  return TrigPoly(std::move(out));
}

TrigPoly TrigPoly::translated(double t0) const {
  if (t0 == 0.0) return *this;
  std::vector<Coefficient> out;
  out.reserve(terms_.size());
  for (const auto& c : terms_) out.push_back({c.k, c.value * unit_phase(-c.k, t0), std::nullopt});
  return TrigPoly(normalise(std::move(out)));
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  std::vector<Coefficient> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.terms_.begin(), a.terms_.end());
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return TrigPoly(normalise(std::move(raw)));
}

bool operator==(const TrigPoly& a, const TrigPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.k != y.k) return false;
    if (x.exact && y.exact) {
      if (!(*x.exact == *y.exact)) return false;
    } else if (x.value != y.value) {
      return false;
    }
  }
  return true;
}

Complex eval(const TrigPoly& p, double t) {
  CompensatedSum sum;
  for (const auto& c : p.terms()) sum.add(c.value * unit_phase(c.k, t));
  return sum.value();
}

Complex partial_sum(const TrigPoly& p, std::int64_t n, double t) {
  if (n < 0) throw InvalidArgument("partial_sum: n must be nonnegative");
  CompensatedSum sum;
  for (const auto& c : p.terms())
    if (std::llabs(c.k) <= n) sum.add(c.value * unit_phase(c.k, t));
  return sum.value();
}

Complex cesaro_mean(const TrigPoly& p, std::int64_t n, double t) {
  if (n < 0) throw InvalidArgument("cesaro_mean: n must be nonnegative");
  const double denom = static_cast<double>(n) + 1.0;
  CompensatedSum sum;
  for (const auto& c : p.terms()) {
    const auto ak = std::llabs(c.k);
    if (ak > n) continue;
    sum.add(c.value * unit_phase(c.k, t) * (1.0 - static_cast<double>(ak) / denom));
  }
  return sum.value();
}

namespace {

// Wide-vector clones of the grid kernels, picked at load time.
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define UF_SIMD_CLONES __attribute__((target_clones("avx512f", "avx2", "default")))
#else
#define UF_SIMD_CLONES
#endif

// z_i *= w_i
UF_SIMD_CLONES void rotate(double* __restrict zr, double* __restrict zi, const double* __restrict wr,
                           const double* __restrict wi, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    const double r = zr[i] * wr[i] - zi[i] * wi[i];
    const double q = zr[i] * wi[i] + zi[i] * wr[i];
    zr[i] = r;
    zi[i] = q;
  }
}

// acc_i += a Re z_i + b Im z_i
UF_SIMD_CLONES void accumulate_real(double* __restrict acc, const double* __restrict zr,
                                    const double* __restrict zi, double a, double b, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) acc[i] += a * zr[i] + b * zi[i];
}

// v_i += (a + ib) z_i
UF_SIMD_CLONES void accumulate_complex(double* __restrict vr, double* __restrict vi, const double* __restrict zr,
                                       const double* __restrict zi, double a, double b, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    vr[i] += a * zr[i] - b * zi[i];
    vi[i] += a * zi[i] + b * zr[i];
  }
}

// e^{ik t_i} on the first m grid points. Runs of consecutive k advance by one
// rotation; gaps and every kReseed steps reload from the table.
class GridPhases {
 public:
  static constexpr std::int64_t kReseed = 256;

  GridPhases(const std::vector<double>& cos_t, const std::vector<double>& sin_t, std::size_t m)
      : cos_t_(cos_t), sin_t_(sin_t), g_(static_cast<std::int64_t>(cos_t.size())), zr_(m), zi_(m) {}

  void move_to(std::int64_t k) {
    if (have_ && k == k_ + 1 && steps_ < kReseed) {
      rotate(zr_.data(), zi_.data(), cos_t_.data(), sin_t_.data(), zr_.size());
      ++steps_;
    } else {
      auto step = k % g_;
      if (step < 0) step += g_;
      std::int64_t idx = 0;
      for (std::size_t i = 0; i < zr_.size(); ++i) {
        zr_[i] = cos_t_[static_cast<std::size_t>(idx)];
        zi_[i] = sin_t_[static_cast<std::size_t>(idx)];
        idx += step;
        if (idx >= g_) idx -= g_;
      }
      steps_ = 0;
      have_ = true;
    }
    k_ = k;
  }
  const double* re() const { return zr_.data(); }
  const double* im() const { return zi_.data(); }

 private:
  const std::vector<double>& cos_t_;
  const std::vector<double>& sin_t_;
  std::int64_t g_;
  std::vector<double> zr_, zi_;
  std::int64_t k_ = 0;
  std::int64_t steps_ = 0;
  bool have_ = false;
};

// Sum of 2 a_k cos(k t_i) over runs of consecutive k, grid points taken kBlock
// at a time so the recurrence cos((k+1)t) = 2 cos t cos kt - cos((k-1)t) stays
// in registers. Each run restarts from the table.
struct CosRun {
  std::int64_t k0;
  std::size_t first, count;
};

constexpr std::size_t kBlock = 64;
constexpr std::size_t kMaxRun = 128;

UF_SIMD_CLONES void cosine_sums(double* __restrict acc, const double* __restrict cos_t, std::int64_t g,
                                std::size_t m, const CosRun* runs, std::size_t run_count,
                                const double* __restrict weights) {
  for (std::size_t i0 = 0; i0 < m; i0 += kBlock) {
    const std::size_t w = std::min(kBlock, m - i0);
    double c[kBlock], sum[kBlock] = {}, prev[kBlock], cur[kBlock];
    for (std::size_t j = 0; j < kBlock; ++j) c[j] = j < w ? cos_t[i0 + j] : 1.0;
    for (std::size_t r = 0; r < run_count; ++r) {
      const auto& run = runs[r];
      for (std::size_t j = 0; j < kBlock; ++j) {
        const auto i = static_cast<std::int64_t>(j < w ? i0 + j : i0);
        auto kp = ((run.k0 - 1) % g + g) % g;
        cur[j] = cos_t[static_cast<std::size_t>((run.k0 % g) * i % g)];
        prev[j] = cos_t[static_cast<std::size_t>(kp * i % g)];
      }
      const double* wt = weights + run.first;
      for (std::size_t q = 0; q < run.count; ++q) {
        const double a = wt[q];
        for (std::size_t j = 0; j < kBlock; ++j) {
          sum[j] += a * cur[j];
          const double next = 2.0 * c[j] * cur[j] - prev[j];
          prev[j] = cur[j];
          cur[j] = next;
        }
      }
    }
    for (std::size_t j = 0; j < w; ++j) acc[i0 + j] += sum[j];
  }
}

bool is_hermitian(const TrigPoly& p) {
  for (const auto& c : p.terms()) {
    if (c.k < 0) continue;
    if (p.coeff(-c.k) != std::conj(c.value)) return false;
  }
  return true;
}

}  // namespace

double sup_norm_estimate(const TrigPoly& p, std::int64_t grid_points) {
  if (grid_points <= 0) throw InvalidArgument("sup_norm_estimate: grid_points must be positive");
  if (p.empty()) return 0.0;
  const auto g = grid_points;
  std::vector<double> cos_t(static_cast<std::size_t>(g)), sin_t(static_cast<std::size_t>(g));
  for (std::int64_t i = 0; i < g; ++i) {
    const double angle = kTwoPi * static_cast<double>(i) / static_cast<double>(g);
    cos_t[static_cast<std::size_t>(i)] = std::cos(angle);
    sin_t[static_cast<std::size_t>(i)] = std::sin(angle);
  }

  if (is_hermitian(p)) {
    // Real values; with real coefficients also even in t, so half the grid suffices.
    const bool even = std::all_of(p.terms().begin(), p.terms().end(),
                                  [](const Coefficient& c) { return c.value.imag() == 0.0; });
    if (even) {
      const auto m = static_cast<std::size_t>(std::min(g, g / 2 + 1));
      std::vector<double> acc(m, p.coeff(0).real());
      std::vector<CosRun> runs;
      std::vector<double> weights;
      for (const auto& c : p.terms()) {
        if (c.k <= 0) continue;
        if (runs.empty() || runs.back().k0 + static_cast<std::int64_t>(runs.back().count) != c.k ||
            runs.back().count == kMaxRun)
          runs.push_back({c.k, weights.size(), 0});
        ++runs.back().count;
        weights.push_back(2.0 * c.value.real());
      }
      cosine_sums(acc.data(), cos_t.data(), g, m, runs.data(), runs.size(), weights.data());
      double best = 0.0;
      for (double v : acc) best = std::max(best, std::abs(v));
      return best;
    }
    const auto m = static_cast<std::size_t>(g);
    std::vector<double> acc(m, p.coeff(0).real());
    GridPhases z(cos_t, sin_t, m);
    for (const auto& c : p.terms()) {
      if (c.k <= 0) continue;
      z.move_to(c.k);
      accumulate_real(acc.data(), z.re(), z.im(), 2.0 * c.value.real(), -2.0 * c.value.imag(), m);
    }
    double best = 0.0;
    for (double v : acc) best = std::max(best, std::abs(v));
    return best;
  }

  const auto m = static_cast<std::size_t>(g);
  std::vector<double> vr(m), vi(m);
  GridPhases z(cos_t, sin_t, m);
  for (const auto& c : p.terms()) {
    z.move_to(c.k);
    accumulate_complex(vr.data(), vi.data(), z.re(), z.im(), c.value.real(), c.value.imag(), m);
  }
  double best = 0.0;
  for (std::size_t i = 0; i < m; ++i) best = std::max(best, std::hypot(vr[i], vi[i]));
  return best;
}

bool grid_undersampled(const TrigPoly& p, std::int64_t grid_points) {
  if (p.empty()) return false;
  return grid_points < 2 * (p.hi() - p.lo() + 1);
}

double coeff_total_variation(const TrigPoly& p) {
  const auto& t = p.terms();
  if (t.empty()) return 0.0;
  double sum = std::abs(t.front().value) + std::abs(t.back().value);
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i].k == t[i - 1].k + 1)
      sum += std::abs(t[i].value - t[i - 1].value);
    else
      sum += std::abs(t[i].value) + std::abs(t[i - 1].value);
  }
  return sum;
}

std::optional<Rational> exact_coeff_total_variation(const TrigPoly& p) {
  if (!p.is_exact()) return std::nullopt;
  const auto& t = p.terms();
  if (t.empty()) return Rational(0);
  bool all_real = true, all_imag = true;
  for (const auto& c : t) {
    all_real = all_real && c.exact->im == 0;
    all_imag = all_imag && c.exact->re == 0;
  }
  if (!all_real && !all_imag) return std::nullopt;
  auto axis = [all_real](const Coefficient& c) -> const Rational& {
    return all_real ? c.exact->re : c.exact->im;
  };
  auto qabs = [](const Rational& q) { return q < 0 ? Rational(-q) : q; };
  Rational sum = qabs(axis(t.front())) + qabs(axis(t.back()));
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i].k == t[i - 1].k + 1)
      sum += qabs(axis(t[i]) - axis(t[i - 1]));
    else
      sum += qabs(axis(t[i])) + qabs(axis(t[i - 1]));
  }
  return sum;
}

std::optional<ComplexQ> exact_partial_sum_at_zero(const TrigPoly& p, std::int64_t n) {
  if (!p.is_exact()) return std::nullopt;
  ComplexQ sum;
  for (const auto& c : p.terms())
    if (std::llabs(c.k) <= n) sum = sum + *c.exact;
  return sum;
}

PartialSumProfile::PartialSumProfile(const TrigPoly& p, double t) {
  std::vector<std::pair<std::int64_t, Complex>> contrib;
  contrib.reserve(p.size());
  for (const auto& c : p.terms()) contrib.emplace_back(std::llabs(c.k), c.value * unit_phase(c.k, t));
  std::stable_sort(contrib.begin(), contrib.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Complex running{};
  for (const auto& [ak, v] : contrib) {
    running += v;
    if (!abs_k_.empty() && abs_k_.back() == ak) {
      sums_.back() = running;
    } else {
      abs_k_.push_back(ak);
      sums_.push_back(running);
    }
  }
}

Complex PartialSumProfile::at(std::int64_t n) const {
  auto it = std::upper_bound(abs_k_.begin(), abs_k_.end(), n);
  if (it == abs_k_.begin()) return {};
  return sums_[static_cast<std::size_t>(it - abs_k_.begin()) - 1];
}

}  // namespace ufourier
