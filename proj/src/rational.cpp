#include "ufourier/rational.hpp"

#include <cctype>
#include <cmath>

#include "ufourier/errors.hpp"

namespace ufourier {

Complex ComplexQ::to_complex() const { return {to_double(re), to_double(im)}; }

double to_double(const Rational& q) {
  // Both parts exact in a double: one IEEE division rounds correctly.
  const auto& num = boost::multiprecision::numerator(q);
  const auto& den = boost::multiprecision::denominator(q);
  if (boost::multiprecision::msb(den) < 53 && (num == 0 || boost::multiprecision::msb(abs(num)) < 53))
    return num.convert_to<double>() / den.convert_to<double>();
  return q.convert_to<double>();
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("exact_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{BigInt(scaled)};
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

ComplexQ exact_complex(Complex z) { return {exact_rational(z.real()), exact_rational(z.imag())}; }

std::string to_fraction_string(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view s) {
  if (s.empty()) throw InvalidArgument("parse_rational: empty integer");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw InvalidArgument("parse_rational: sign without digits");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InvalidArgument("parse_rational: bad digit in '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("parse_rational: empty input");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("parse_rational: zero denominator");
    return Rational(parse_integer(text.substr(0, slash)), den);
  }

  std::int64_t exponent = 0;
  std::string_view mantissa = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<std::int64_t>(parse_integer(text.substr(e + 1)));
    mantissa = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto frac = mantissa.substr(dot + 1);
    digits = std::string(mantissa.substr(0, dot)) + std::string(frac);
    exponent -= static_cast<std::int64_t>(frac.size());
    if (digits.empty() || digits == "-" || digits == "+")
      throw InvalidArgument("parse_rational: no digits in '" + std::string(text) + "'");
  } else {
    digits = std::string(mantissa);
  }
  Rational r{parse_integer(digits)};
  if (exponent != 0) {
    BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::llabs(exponent)));
    if (exponent > 0) r *= Rational(p); else r /= Rational(p);
  }
  return r;
}

Rational pow_rational(const Rational& base, int exponent) {
  Rational result(1);
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  unsigned e = static_cast<unsigned>(exponent >= 0 ? exponent : -exponent);
  while (e) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

Rational harmonic_exact(std::int64_t n) {
  // Accumulate over a common integer numerator/denominator; normalising
  // once at the end is much cheaper than a gcd per step.
  BigInt num = 0, den = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    num = num * k + den;
    den *= k;
  }
  return Rational(num, den);
}

}  // namespace ufourier
