#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace detail {
inline long long checked_narrow(__int128 v, const char* ctx) {
  if (v > INT64_MAX / 2 || v < -(INT64_MAX / 2))
    throw internal_error(std::string("integer overflow in ") + ctx);
  return static_cast<long long>(v);
}
}  // namespace detail

// Exact rational with int64 storage; all intermediates go through __int128
// and overflow aborts rather than wrapping.
struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, gcd(num, den) = 1

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw domain_error("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Rational operator+(const Rational& x, const Rational& y) {
    __int128 n = (__int128)x.num * y.den + (__int128)y.num * x.den;
    __int128 d = (__int128)x.den * y.den;
    return normalized(n, d);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    __int128 n = (__int128)x.num * y.den - (__int128)y.num * x.den;
    __int128 d = (__int128)x.den * y.den;
    return normalized(n, d);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return normalized((__int128)x.num * y.num, (__int128)x.den * y.den);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num == 0) throw domain_error("Rational: division by zero");
    return normalized((__int128)x.num * y.den, (__int128)x.den * y.num);
  }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
  Rational& operator+=(const Rational& y) { *this = *this + y; return *this; }
  Rational& operator-=(const Rational& y) { *this = *this - y; return *this; }
  Rational& operator*=(const Rational& y) { *this = *this * y; return *this; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static Rational normalized(__int128 n, __int128 d) {
    if (d == 0) throw domain_error("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    Rational r;
    r.num = detail::checked_narrow(n, "Rational");
    r.den = detail::checked_narrow(d, "Rational");
    if (r.num == 0) r.den = 1;
    return r;
  }
};

}  // namespace heckelab
