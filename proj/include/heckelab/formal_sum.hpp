#pragma once

#include <map>
#include <sstream>
#include <string>

#include "heckelab/rational.hpp"

namespace heckelab {

// Finitely supported formal sum over ordered keys.  Zero coefficients are
// never stored, so equality is structural and iteration order is canonical.
template <class Key, class Coef = Rational>
class FormalSum {
 public:
  using Terms = std::map<Key, Coef>;

  FormalSum() = default;

  static FormalSum single(const Key& k, const Coef& c = Coef(1)) {
    FormalSum s;
    s.add(k, c);
    return s;
  }

  void add(const Key& k, const Coef& c) {
    if (c == Coef(0)) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coef(0)) t_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (auto& [k, c] : o.t_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (auto& [k, c] : o.t_) add(k, Coef(0) - c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { a += b; return a; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { a -= b; return a; }

  FormalSum scaled(const Coef& c) const {
    FormalSum r;
    if (c == Coef(0)) return r;
    for (auto& [k, v] : t_) r.t_.emplace(k, v * c);
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const Terms& terms() const { return t_; }

  Coef coeff(const Key& k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Coef(0) : it->second;
  }

  Coef total_mass() const {
    Coef s(0);
    for (auto& [k, c] : t_) s += c;
    return s;
  }

  friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.t_ == b.t_; }
  friend bool operator!=(const FormalSum& a, const FormalSum& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << c.str() << "*[" << k << "]";
    }
    return first ? "0" : os.str();
  }

 private:
  Terms t_;
};

}  // namespace heckelab
