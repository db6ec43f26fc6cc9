#pragma once

#include <string>
#include <utility>

#include "heckelab/laurent.hpp"

namespace heckelab {

namespace detail {

// Polynomial division by leading (highest-degree) term; both val >= 0.
inline std::pair<Laurent, Laurent> poly_divmod(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw domain_error("poly_divmod by zero");
  long long q = a.q();
  Laurent quo(q), rem = a;
  long long blc_inv = fq::inv(b.terms().back().second, q);
  int bdeg = b.deg();
  while (!rem.is_zero() && rem.deg() >= bdeg) {
    long long c = fq::mul(rem.terms().back().second, blc_inv, q);
    int e = rem.deg() - bdeg;
    Laurent t = Laurent::monomial(q, e, c);
    quo += t;
    rem -= t * b;
  }
  return {quo, rem};
}

inline Laurent poly_gcd(Laurent a, Laurent b) {
  while (!b.is_zero()) {
    Laurent r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace detail

// Element of F = F_q((w)) stored exactly as a reduced fraction of Laurent
// polynomials.  Canonical form: denominator has valuation 0, lowest
// coefficient 1, and shares no polynomial factor with the numerator; the
// zero element is 0/1.  Equality is therefore structural.
class FieldElem {
 public:
  FieldElem() = default;
  explicit FieldElem(long long q) : num_(Laurent::zero(q)), den_(Laurent::one(q)) {}
  FieldElem(long long q, long long constant) : num_(q, constant), den_(Laurent::one(q)) {}
  explicit FieldElem(const Laurent& p) : num_(p), den_(Laurent::one(p.q())) {}
  FieldElem(const Laurent& n, const Laurent& d) : num_(n), den_(d) { canonicalize(); }

  static FieldElem zero(long long q) { return FieldElem(q); }
  static FieldElem one(long long q) { return FieldElem(q, 1); }
  static FieldElem uniformizer(long long q, int e = 1) {
    return FieldElem(Laurent::monomial(q, e, 1));
  }

  long long q() const { return num_.q(); }
  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  // val(num) - val(den); kValInfinity for zero.
  int val() const {
    if (num_.is_zero()) return kValInfinity;
    return num_.val() - den_.val();
  }
  bool is_integral() const { return is_zero() || val() >= 0; }
  bool is_unit() const { return !is_zero() && val() == 0; }

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    return FieldElem(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y) {
    if (y.is_zero()) throw domain_error("FieldElem: division by zero");
    return FieldElem(x.num_ * y.den_, x.den_ * y.num_);
  }
  FieldElem operator-() const { FieldElem r = *this; r.num_ = -r.num_; return r; }
  FieldElem& operator+=(const FieldElem& y) { *this = *this + y; return *this; }
  FieldElem& operator-=(const FieldElem& y) { *this = *this - y; return *this; }
  FieldElem& operator*=(const FieldElem& y) { *this = *this * y; return *this; }
  FieldElem& operator/=(const FieldElem& y) { *this = *this / y; return *this; }

  FieldElem inverse() const {
    if (is_zero()) throw domain_error("FieldElem: inverse of zero");
    return FieldElem(den_, num_);
  }

  friend bool operator==(const FieldElem& x, const FieldElem& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

  // The unique Laurent polynomial congruent to *this mod w^N with support
  // in [val, N).  Computed by w-adic long division; exact.
  Laurent truncate(int N) const {
    long long qq = q();
    Laurent out(qq);
    if (is_zero()) return out;
    // den_ has valuation 0 and lowest coefficient 1.
    Laurent rem = num_;
    while (!rem.is_zero() && rem.val() < N + den_.val()) {
      long long c = rem.low_coeff();
      int e = rem.val();
      out.set_coeff(e, c);
      rem -= Laurent::monomial(qq, e, c) * den_;
    }
    return out.slice(out.val(), N);
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw domain_error("FieldElem: zero denominator");
    long long qq = num_.q();
    if (num_.is_zero()) {
      den_ = Laurent::one(qq);
      return;
    }
    if (den_.is_one()) return;
    // Shift so both parts are ordinary polynomials, cancel the gcd, then
    // push the leftover w-power and unit into the numerator.
    int vn = num_.val(), vd = den_.val();
    Laurent n0 = num_.shifted(-vn), d0 = den_.shifted(-vd);
    Laurent g = detail::poly_gcd(n0, d0);
    if (g.deg() > 0) {
      n0 = detail::poly_divmod(n0, g).first;
      d0 = detail::poly_divmod(d0, g).first;
    }
    long long u = fq::inv(d0.low_coeff(), qq);
    Laurent unit = Laurent(qq, u);
    num_ = (n0 * unit).shifted(vn - vd);
    den_ = d0 * unit;
  }

  Laurent num_, den_;
};

inline int valuation(const FieldElem& x) { return x.val(); }

inline Laurent series_truncate(const FieldElem& x, int N) { return x.truncate(N); }

}  // namespace heckelab
