#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ufourier {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact complex rational a + bi.
struct ComplexQ {
  Rational re;
  Rational im;

  ComplexQ() = default;
  ComplexQ(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Complex to_complex() const;

  friend ComplexQ operator+(const ComplexQ& a, const ComplexQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexQ operator-(const ComplexQ& a, const ComplexQ& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexQ operator*(const ComplexQ& a, const ComplexQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexQ operator*(const ComplexQ& a, const Rational& s) { return {a.re * s, a.im * s}; }
  friend ComplexQ operator/(const ComplexQ& a, const Rational& s) { return {a.re / s, a.im / s}; }
  friend bool operator==(const ComplexQ& a, const ComplexQ& b) { return a.re == b.re && a.im == b.im; }
};

double to_double(const Rational& q);

// Exact rational value of a finite double (every finite double is dyadic).
Rational exact_rational(double x);
ComplexQ exact_complex(Complex z);

// "p/q" (or "p" when q == 1).
std::string to_fraction_string(const Rational& q);

// Accepts "p/q", integers and plain decimals ("1.5", "-0.25", "3e-2"), exactly.
Rational parse_rational(std::string_view text);

Rational pow_rational(const Rational& base, int exponent);

// H_n = 1 + 1/2 + ... + 1/n.
Rational harmonic_exact(std::int64_t n);

}  // namespace ufourier
