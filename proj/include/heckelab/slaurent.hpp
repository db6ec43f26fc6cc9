#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/rational.hpp"

namespace heckelab {

// Integer Laurent polynomial in the formal symbol s = q^{1/2}.
// Sorted sparse terms, never storing zero coefficients.
class SLaurent {
 public:
  SLaurent() = default;
  SLaurent(long long c) { if (c) t_.push_back({0, c}); }
  static SLaurent monomial(int e, long long c) {
    SLaurent r;
    if (c) r.t_.push_back({e, c});
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  const std::vector<std::pair<int, long long>>& terms() const { return t_; }

  friend SLaurent operator+(const SLaurent& x, const SLaurent& y) {
    SLaurent r;
    auto ix = x.t_.begin(), iy = y.t_.begin();
    while (ix != x.t_.end() || iy != y.t_.end()) {
      if (iy == y.t_.end() || (ix != x.t_.end() && ix->first < iy->first)) r.t_.push_back(*ix++);
      else if (ix == x.t_.end() || iy->first < ix->first) r.t_.push_back(*iy++);
      else {
        long long c = ix->second + iy->second;
        if (c) r.t_.push_back({ix->first, c});
        ++ix; ++iy;
      }
    }
    return r;
  }
  friend SLaurent operator-(const SLaurent& x, const SLaurent& y) { return x + y.negated(); }
  SLaurent negated() const {
    SLaurent r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  friend SLaurent operator*(const SLaurent& x, const SLaurent& y) {
    SLaurent r;
    for (auto& [ex, cx] : x.t_)
      for (auto& [ey, cy] : y.t_) {
        __int128 prod = (__int128)cx * cy;
        r += SLaurent::monomial(ex + ey, detail::checked_narrow(prod, "SLaurent"));
      }
    return r;
  }
  SLaurent& operator+=(const SLaurent& y) { *this = *this + y; return *this; }
  SLaurent& operator-=(const SLaurent& y) { *this = *this - y; return *this; }
  SLaurent& operator*=(const SLaurent& y) { *this = *this * y; return *this; }

  // Multiply by s^e.
  SLaurent shifted(int e) const {
    SLaurent r = *this;
    for (auto& [ex, c] : r.t_) ex += e;
    return r;
  }

  friend bool operator==(const SLaurent& x, const SLaurent& y) { return x.t_ == y.t_; }
  friend bool operator!=(const SLaurent& x, const SLaurent& y) { return !(x == y); }
  friend bool operator<(const SLaurent& x, const SLaurent& y) { return x.t_ < y.t_; }

  bool all_even_powers() const {
    for (auto& [e, c] : t_)
      if (e & 1) return false;
    return true;
  }

  // s^2 |-> q; requires even powers.
  Rational specialize(long long q) const {
    Rational out(0);
    for (auto& [e, c] : t_) {
      if (e & 1) throw normalization_error("SLaurent: odd s-power at specialization");
      int h = e / 2;
      Rational p(1);
      for (int i = 0; i < (h < 0 ? -h : h); ++i) p *= Rational(q);
      out += (h >= 0) ? Rational(c) * p : Rational(c) / p;
    }
    return out;
  }

  // e.g. "s^2", "-2*s^4", "3", "s^-2"
  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t_) {
      long long a = c;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (e == 0) os << a;
      else {
        if (a != 1) os << a << "*";
        os << (e == 1 ? "s" : "s^" + std::to_string(e));
      }
    }
    return os.str();
  }

 private:
  std::vector<std::pair<int, long long>> t_;
};

}  // namespace heckelab
