#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "ufourier/errors.hpp"
#include "ufourier/fejer.hpp"
#include "ufourier/phase.hpp"

using namespace ufourier;

TEST_CASE("fejer_coeffs(5,3) table") {
  const auto q = fejer_coeffs(FejerOrder(5, 3));
  REQUIRE(q.size() == 12);
  const std::vector<std::pair<std::int64_t, Rational>> table = {
      {4, Rational(1, 2)},  {3, Rational(1, 4)},  {2, Rational(1, 6)},
      {6, Rational(-1, 2)}, {7, Rational(-1, 4)}, {8, Rational(-1, 6)}};
  for (const auto& [k, v] : table) {
    CHECK(*q.exact_coeff(k) == ComplexQ(v));
    CHECK(*q.exact_coeff(-k) == ComplexQ(v));
  }
}

TEST_CASE("fejer_coeffs(2,1)") {
  const auto q = fejer_coeffs(FejerOrder(2, 1));
  CHECK(q.size() == 4);
  CHECK(*q.exact_coeff(1) == ComplexQ(Rational(1, 2)));
  CHECK(*q.exact_coeff(-3) == ComplexQ(Rational(-1, 2)));
}

TEST_CASE("orders need N > n >= 1") {
  CHECK_THROWS_AS(FejerOrder(3, 3), InvalidArgument);
  CHECK_THROWS_AS(FejerOrder(3, 0), InvalidArgument);
}

TEST_CASE("product form") {
  for (auto [N, n] : std::vector<std::pair<int, int>>{{5, 3}, {12, 11}, {200, 50}}) {
    const auto q = fejer_coeffs(FejerOrder(N, n));
    CHECK(static_cast<int>(q.size()) == 4 * n);
    for (double t : {0.7, 1.9, -2.4, 3.1}) CHECK(std::abs(eval(q, t) - oracle::fejer_product(N, n, t)) < 1e-12);
  }
}

TEST_CASE("resonance is H_n") {
  auto r = fejer_resonance(FejerOrder(5, 3));
  CHECK(*r.exact == Rational(11, 6));
  CHECK(*fejer_resonance(FejerOrder(2, 1)).exact == Rational(1));
  Rational h = 0;
  for (int k = 1; k <= 1000; ++k) h += Rational(1, k);
  auto big = fejer_resonance(FejerOrder(2000, 1000));
  CHECK(harmonic_exact(1000) == h);
  CHECK(std::abs(big.value - 7.485470860550345) < 1e-14);
  // Past the exact limit only the double survives.
  auto huge = fejer_resonance(FejerOrder(100000, 60000));
  CHECK_FALSE(huge.exact);
  CHECK(std::abs(huge.value - oracle::harmonic(60000)) < 1e-13);
}

TEST_CASE("scaled_fejer examples") {
  const FejerOrder o(5, 3);
  auto same = scaled_fejer({o, ComplexQ(Rational(11, 6)), 1.0, CertMode::relaxed});
  CHECK(same == fejer_coeffs(o));
  CHECK(scaled_fejer({o, ComplexQ(), 1.0, CertMode::strict}).empty());
  auto ip = scaled_fejer({o, ComplexQ(Rational(0), Rational(1)), 1.0, CertMode::relaxed});
  CHECK(std::abs(partial_sum(ip, 5, 0.0) - Complex(0, 1)) < 1e-12);
  CHECK(eval(ip, 0.0) == Complex(0, 0));
  CHECK(*exact_coeff_total_variation(ip) == Rational(4) / Rational(11, 6));
}

TEST_CASE("scaled_fejer variation is 4|c|/H_n") {
  const FejerOrder o(30, 9);
  const ComplexQ c(Rational(-3, 7));
  auto p = scaled_fejer({o, c, 1.0, CertMode::relaxed});
  CHECK(*exact_coeff_total_variation(p) == Rational(12, 7) / harmonic_exact(9));
}

TEST_CASE("scaled_fejer strict threshold") {
  // kappa |c| / eps = 8 * 1 / 4 = 2 > H_3.
  CHECK_THROWS_AS(scaled_fejer({FejerOrder(5, 3), ComplexQ(Rational(1)), 4.0, CertMode::strict}), InvalidArgument);
  CHECK_NOTHROW(scaled_fejer({FejerOrder(9, 4), ComplexQ(Rational(1)), 4.0, CertMode::strict}));
}

TEST_CASE("scaled_fejer past the exact limit") {
  const FejerOrder o(5000, 1000);
  auto p = scaled_fejer({o, ComplexQ(Rational(1, 2)), 1.0, CertMode::relaxed});
  CHECK_FALSE(p.is_exact());
  CHECK(std::abs(partial_sum(p, 5000, 0.0) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(eval(p, 0.0)) < 1e-12);
}

TEST_CASE("pick_order examples") {
  CHECK(pick_order(0.0, 0.5, 4) == 1);
  CHECK(pick_order(1.0, 4, 4) == 1);
  CHECK(pick_order(1.0, 2, 4) == 4);
  CHECK_THROWS_AS(pick_order(1.0, 0.01, 8, 1000), QuotaError);
  // Minimality against the oracle.
  for (double thr : {1.5, 3.0, 5.5, 9.0}) {
    const auto n = pick_order(thr, 1.0, 1.0);
    CHECK(oracle::harmonic(n) >= thr);
    CHECK(oracle::harmonic(n - 1) < thr);
  }
}

TEST_CASE("decay_calibrate examples") {
  const double pi = std::numbers::pi;
  auto brute = [](int N, int n, double t, int kmax) {
    const auto q = fejer_coeffs(FejerOrder(N, n));
    std::vector<std::pair<std::int64_t, Complex>> cs;
    for (const auto& c : q.terms()) cs.emplace_back(c.k, c.value);
    double m = 0.0;
    for (int k = 0; k <= kmax; ++k) m = std::max(m, std::abs(oracle::direct_sum(cs, t, k)));
    return m * std::abs(reduce_angle(t));
  };
  const std::vector<double> at_pi{pi}, at_half{pi / 2};
  CHECK(std::abs(decay_calibrate(FejerOrder(5, 3), at_pi, 8) - brute(5, 3, pi, 8)) < 1e-12);
  CHECK(std::abs(decay_calibrate(FejerOrder(2, 1), at_half, 3) - brute(2, 1, pi / 2, 3)) < 1e-12);
  CHECK(decay_calibrate(FejerOrder(9, 4), at_half, 0) == 0.0);
  const std::vector<double> zero{0.0};
  CHECK_THROWS_AS(decay_calibrate(FejerOrder(5, 3), zero, 4), InvalidArgument);
}

TEST_CASE("decay constant holds on the calibration sweep") {
  std::vector<double> ts;
  for (int i = 1; i <= 64; ++i) ts.push_back(2 * std::numbers::pi * i / 65.0);
  double worst = 0.0;
  for (int N = 2; N <= 64; ++N)
    for (int n = 1; n < N; ++n) worst = std::max(worst, decay_calibrate(FejerOrder(N, n), ts, 2 * (N + n)));
  CHECK(worst <= kDecayBound);
}

TEST_CASE("resonance and variation identities, exact sweep") {
  for (int N = 2; N <= 64; ++N) {
    for (int n = 1; n < N; ++n) {
      const auto q = fejer_coeffs(FejerOrder(N, n));
      const auto s = exact_partial_sum_at_zero(q, N);
      REQUIRE(s);
      CHECK(s->re == harmonic_exact(n));
      CHECK(s->im.is_zero());
      CHECK(*exact_coeff_total_variation(q) == Rational(4));
      CHECK(eval(q, 0.0) == Complex(0, 0));
    }
  }
}
