#pragma once

#include <cstdint>
#include <numeric>
#include <numbers>
#include <stdexcept>

namespace ultrapar {

// Exact rational with int64 parts; the g-table coefficients stay tiny.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  constexpr bool is_zero() const { return num == 0; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend constexpr Rational operator-(Rational a) { return {-a.num, a.den}; }
  friend constexpr Rational operator-(Rational a, Rational b) { return a + (-b); }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend constexpr bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
};

// p + q sqrt(3)
struct QSqrt3 {
  Rational p;
  Rational q;

  constexpr QSqrt3() = default;
  constexpr QSqrt3(Rational a, Rational b = Rational(0)) : p(a), q(b) {}
  constexpr QSqrt3(std::int64_t a) : p(a), q(0) {}

  double to_double() const { return p.to_double() + q.to_double() * std::numbers::sqrt3; }
  constexpr bool is_zero() const { return p.is_zero() && q.is_zero(); }

  friend constexpr QSqrt3 operator+(QSqrt3 a, QSqrt3 b) { return {a.p + b.p, a.q + b.q}; }
  friend constexpr QSqrt3 operator-(QSqrt3 a) { return {-a.p, -a.q}; }
  friend constexpr QSqrt3 operator-(QSqrt3 a, QSqrt3 b) { return {a.p - b.p, a.q - b.q}; }
  friend constexpr QSqrt3 operator*(QSqrt3 a, QSqrt3 b) {
    return {a.p * b.p + Rational(3) * a.q * b.q, a.p * b.q + a.q * b.p};
  }
  friend constexpr bool operator==(QSqrt3 a, QSqrt3 b) { return a.p == b.p && a.q == b.q; }
};

}  // namespace ultrapar
