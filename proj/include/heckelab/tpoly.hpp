#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/slaurent.hpp"

namespace heckelab {

// Commuting monomial in the spherical generators T_{1..n+1,V} and T_{1..n,W};
// ev[k-1] is the exponent of T_{k,V}, likewise ew for the W factor.
struct TMono {
  std::vector<int> ev, ew;

  TMono() = default;
  TMono(int n) : ev(static_cast<size_t>(n + 1), 0), ew(static_cast<size_t>(n), 0) {}

  int degV() const { int d = 0; for (int e : ev) d += e; return d; }
  int degW() const { int d = 0; for (int e : ew) d += e; return d; }
  bool is_one() const { return degV() == 0 && degW() == 0; }

  // Fixture ordering: total V-degree desc, then W-degree desc, then lex.
  friend bool operator<(const TMono& a, const TMono& b) {
    int av = a.degV(), bv = b.degV();
    if (av != bv) return av > bv;
    int aw = a.degW(), bw = b.degW();
    if (aw != bw) return aw > bw;
    if (a.ev != b.ev) return a.ev < b.ev;
    return a.ew < b.ew;
  }
  friend bool operator==(const TMono& a, const TMono& b) { return a.ev == b.ev && a.ew == b.ew; }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::vector<int>& e, const char* f) {
      for (size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        if (!first) os << "*";
        first = false;
        os << "T" << (k + 1) << f;
        if (e[k] > 1) os << "^" << e[k];
      }
    };
    emit(ev, "V");
    emit(ew, "W");
    return first ? "1" : os.str();
  }
};

// Element of the spherical Hecke algebra of G written as a polynomial in the
// commuting generators, with Z[s, s^-1] coefficients.
using TPoly = std::map<TMono, SLaurent>;

inline void tpoly_add(TPoly& p, const TMono& m, const SLaurent& c) {
  if (c.is_zero()) return;
  auto [it, ins] = p.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline bool tpoly_even_powers(const TPoly& p) {
  for (auto& [m, c] : p)
    if (!c.all_even_powers()) return false;
  return true;
}

// Polynomial in z of degree n(n+1) with TPoly coefficients.
struct HeckePoly {
  int n = 0;
  std::vector<TPoly> coef;  // coef[k] multiplies z^k

  int degree() const { return static_cast<int>(coef.size()) - 1; }
};

}  // namespace heckelab
