#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

// Valuation of the zero polynomial; a distinguished tag, never an arithmetic value.
inline constexpr int kValInfinity = INT_MAX;

namespace fq {
// Residue arithmetic modulo a prime q.  Values are kept in [0, q).
inline long long norm(long long v, long long q) {
  v %= q;
  if (v < 0) v += q;
  return v;
}
inline long long add(long long a, long long b, long long q) { return norm(a + b, q); }
inline long long sub(long long a, long long b, long long q) { return norm(a - b, q); }
inline long long mul(long long a, long long b, long long q) { return norm(a * b, q); }
inline long long pow(long long a, long long e, long long q) {
  long long r = 1 % q;
  a = norm(a, q);
  while (e > 0) {
    if (e & 1) r = mul(r, a, q);
    a = mul(a, a, q);
    e >>= 1;
  }
  return r;
}
// Fermat inverse; q is prime.
inline long long inv(long long a, long long q) {
  a = norm(a, q);
  if (a == 0) throw domain_error("fq::inv of zero");
  return pow(a, q - 2, q);
}
inline bool is_prime(long long q) {
  if (q < 2) return false;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}
}  // namespace fq

// Laurent polynomial over the prime field F_q in the uniformizer w.
// Terms are kept sorted by exponent with nonzero coefficients only, so the
// representation is canonical and equality is structural.
class Laurent {
 public:
  Laurent() : q_(0) {}
  explicit Laurent(long long q) : q_(q) {}
  Laurent(long long q, long long constant) : q_(q) {
    long long c = fq::norm(constant, q);
    if (c != 0) terms_.push_back({0, c});
  }

  static Laurent zero(long long q) { return Laurent(q); }
  static Laurent one(long long q) { return Laurent(q, 1); }
  // c * w^e
  static Laurent monomial(long long q, int e, long long c) {
    Laurent r(q);
    c = fq::norm(c, q);
    if (c != 0) r.terms_.push_back({e, c});
    return r;
  }

  long long q() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1; }

  int val() const { return terms_.empty() ? kValInfinity : terms_.front().first; }
  int deg() const { return terms_.empty() ? INT_MIN : terms_.back().first; }

  long long coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, int x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
  }

  const std::vector<std::pair<int, long long>>& terms() const { return terms_; }

  void set_coeff(int e, long long c) {
    c = fq::norm(c, q_);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
      if (c == 0) terms_.erase(it);
      else it->second = c;
    } else if (c != 0) {
      terms_.insert(it, {e, c});
    }
  }

  friend Laurent operator+(const Laurent& x, const Laurent& y) {
    Laurent r(x.compat(y));
    auto ix = x.terms_.begin(), iy = y.terms_.begin();
    while (ix != x.terms_.end() || iy != y.terms_.end()) {
      if (iy == y.terms_.end() || (ix != x.terms_.end() && ix->first < iy->first)) {
        r.terms_.push_back(*ix++);
      } else if (ix == x.terms_.end() || iy->first < ix->first) {
        r.terms_.push_back(*iy++);
      } else {
        long long c = fq::add(ix->second, iy->second, r.q_);
        if (c != 0) r.terms_.push_back({ix->first, c});
        ++ix; ++iy;
      }
    }
    return r;
  }
  friend Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }
  Laurent operator-() const {
    Laurent r(q_);
    r.terms_.reserve(terms_.size());
    for (auto& [e, c] : terms_) r.terms_.push_back({e, q_ - c});
    return r;
  }
  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    long long q = x.compat(y);
    Laurent r(q);
    if (x.is_zero() || y.is_zero()) return r;
    int lo = x.val() + y.val();
    int hi = x.deg() + y.deg();
    std::vector<long long> acc(static_cast<size_t>(hi - lo + 1), 0);
    for (auto& [ex, cx] : x.terms_)
      for (auto& [ey, cy] : y.terms_)
        acc[static_cast<size_t>(ex + ey - lo)] = fq::norm(acc[static_cast<size_t>(ex + ey - lo)] + cx * cy, q);
    for (int e = lo; e <= hi; ++e)
      if (acc[static_cast<size_t>(e - lo)] != 0) r.terms_.push_back({e, acc[static_cast<size_t>(e - lo)]});
    return r;
  }
  Laurent& operator+=(const Laurent& y) { *this = *this + y; return *this; }
  Laurent& operator-=(const Laurent& y) { *this = *this - y; return *this; }
  Laurent& operator*=(const Laurent& y) { *this = *this * y; return *this; }

  friend bool operator==(const Laurent& x, const Laurent& y) {
    return x.q_ == y.q_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const Laurent& x, const Laurent& y) { return !(x == y); }
  friend bool operator<(const Laurent& x, const Laurent& y) { return x.terms_ < y.terms_; }

  // Multiply by w^e.
  Laurent shifted(int e) const {
    Laurent r(q_);
    r.terms_.reserve(terms_.size());
    for (auto& [ex, c] : terms_) r.terms_.push_back({ex + e, c});
    return r;
  }

  // Terms with exponent in [lo, hi).
  Laurent slice(int lo, int hi) const {
    Laurent r(q_);
    for (auto& [e, c] : terms_)
      if (e >= lo && e < hi) r.terms_.push_back({e, c});
    return r;
  }

  // Lowest-exponent coefficient (the "leading unit" of the w-adic expansion).
  long long low_coeff() const {
    if (terms_.empty()) throw domain_error("low_coeff of zero");
    return terms_.front().second;
  }

  // Rendering with integer coefficients, e.g. "1+2*w+w^3" or "w^-2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
      if (!first) out += "+";
      first = false;
      if (e == 0) {
        out += std::to_string(c);
      } else {
        if (c != 1) out += std::to_string(c) + "*";
        out += (e == 1) ? "w" : "w^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  long long compat(const Laurent& y) const {
    if (q_ != y.q_) throw domain_error("Laurent: mixed residue characteristics");
    return q_;
  }

  long long q_;
  std::vector<std::pair<int, long long>> terms_;
};

}  // namespace heckelab
