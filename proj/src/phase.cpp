#include "ufourier/phase.hpp"

#include <cmath>

namespace ufourier {

namespace {

// 2*pi = kP1 + kP2 + kP3 to ~160 bits.
constexpr double kP1 = 6.283185307179586;
constexpr double kP2 = 2.4492935982947064e-16;
constexpr double kP3 = -5.989539619436679e-33;

struct DD {
  double hi;
  double lo;
};

DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return two_sum(s.hi, lo);
}

}  // namespace

double reduce_phase(std::int64_t k, double t) {
  if (k == 0 || t == 0.0) return 0.0;
  const double kd = static_cast<double>(k);
  DD x = two_prod(kd, t);
  const double q = std::nearbyint(x.hi / kP1);
  if (q != 0.0) {
    DD a = two_prod(q, kP1);
    DD b = two_prod(q, kP2);
    x = dd_add(x, DD{-a.hi, -a.lo});
    x = dd_add(x, DD{-b.hi, -b.lo});
    x = dd_add(x, DD{-q * kP3, 0.0});
  }
  double r = x.hi + x.lo;
  // The quotient estimate can be off by one near the +-pi boundary.
  if (r > kPi) r -= kTwoPi;
  if (r < -kPi) r += kTwoPi;
  return r;
}

double reduce_angle(double t) {
  double r = reduce_phase(1, t);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

Complex unit_phase(std::int64_t k, double t) {
  const double r = reduce_phase(k, t);
  return {std::cos(r), std::sin(r)};
}

}  // namespace ufourier
