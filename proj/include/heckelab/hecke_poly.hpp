#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/sympoly.hpp"
#include "heckelab/tpoly.hpp"

namespace heckelab {

// ---------------------------------------------------------------------------
// Newton--Girard: the power sum Y^(k) as a polynomial Q_k(Y_1, ..., Y_n)

using YPoly = std::map<std::vector<int>, long long>;  // exponents of Y_1..Y_n

inline void ypoly_add(YPoly& p, const std::vector<int>& m, long long c) {
  if (!c) return;
  auto [it, ins] = p.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (!it->second) p.erase(it);
  }
}

inline YPoly ypoly_mul_gen(const YPoly& p, int j, long long c) {
  YPoly r;
  for (auto& [m, pc] : p) {
    std::vector<int> mm = m;
    mm[static_cast<size_t>(j - 1)] += 1;
    ypoly_add(r, mm, detail::checked_narrow((__int128)pc * c, "YPoly"));
  }
  return r;
}

// Q_k with the recursion split at k = n.  The k <= n branch carries the
// (-1)^{k-1} k Y_k term (pinned by Y^(1) = Y_1); for k > n the pure
// convolution branch applies.
inline const YPoly& newton_girard(int k, int n) {
  static std::map<std::pair<int, int>, YPoly> memo;
  static std::recursive_mutex memo_mutex;
  std::lock_guard<std::recursive_mutex> lock(memo_mutex);
  auto key = std::make_pair(k, n);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (k < 1) throw domain_error("newton_girard: k must be >= 1");
  YPoly q;
  if (k <= n) {
    std::vector<int> m(static_cast<size_t>(n), 0);
    m[static_cast<size_t>(k - 1)] = 1;
    ypoly_add(q, m, (k % 2 == 1) ? k : -k);
  }
  for (int i = std::max(1, k - n); i <= k - 1; ++i) {
    long long sign = ((k - 1 + i) % 2 == 0) ? 1 : -1;
    const YPoly& qi = newton_girard(i, n);
    YPoly term = ypoly_mul_gen(qi, k - i, sign);
    for (auto& [m, c] : term) ypoly_add(q, m, c);
  }
  return memo.emplace(key, std::move(q)).first->second;
}

// Numeric check helper: evaluate Q_k at given values of Y_1..Y_n (mod p).
inline long long ypoly_eval_mod(const YPoly& q, const std::vector<long long>& yvals, long long p) {
  long long acc = 0;
  for (auto& [m, c] : q) {
    long long t = ((c % p) + p) % p;
    for (size_t j = 0; j < m.size(); ++j)
      for (int e = 0; e < m[j]; ++e) t = t * (yvals[j] % p) % p;
    acc = (acc + t) % p;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// The product expansion and the Satake dictionary

// Coefficients of prod_{i<=n+1} prod_{j<=n} (z - x_i y_j) in the X/Y
// elementary basis, indexed by z-degree.  The scalar t = s^{2n-1} carried by
// each factor is accounted for at substitution time (the z^{N-k} coefficient
// picks up t^k exactly).
inline std::vector<EPoly> expand_product(int n) {
  if (n < 1 || n > 4) throw domain_error("expand_product: supported range is 1 <= n <= 4");
  int N = n * (n + 1);
  std::vector<XYPoly> raw(static_cast<size_t>(N + 1));
  XYMono one;
  one.xe.assign(static_cast<size_t>(n + 1), 0);
  one.ye.assign(static_cast<size_t>(n), 0);
  xy_add(raw[0], one, 1);
  int used = 0;
  for (int i = 0; i < n + 1; ++i)
    for (int j = 0; j < n; ++j) {
      // multiply by (z - x_i y_j)
      std::vector<XYPoly> next(static_cast<size_t>(N + 1));
      for (int d = 0; d <= used; ++d) {
        for (auto& [m, c] : raw[static_cast<size_t>(d)]) {
          xy_add(next[static_cast<size_t>(d + 1)], m, c);
          XYMono mm = m;
          mm.xe[static_cast<size_t>(i)] += 1;
          mm.ye[static_cast<size_t>(j)] += 1;
          xy_add(next[static_cast<size_t>(d)], mm, -c);
        }
      }
      raw = std::move(next);
      ++used;
    }
  ElementaryExpander ex(n + 1, n);
  std::vector<EPoly> out(static_cast<size_t>(N + 1));
  for (int d = 0; d <= N; ++d) out[static_cast<size_t>(d)] = reduce_to_elementary(raw[static_cast<size_t>(d)], ex);
  return out;
}

// X_k <-> s^{-(n+1-k)k} T_{k,V},  Y_k <-> s^{-(n-k)k} T_{k,W}; the z^{N-k}
// coefficient additionally carries t^k = s^{(2n-1)k}.
inline HeckePoly satake_substitute(const std::vector<EPoly>& coef, int n) {
  int N = n * (n + 1);
  HeckePoly h;
  h.n = n;
  h.coef.resize(static_cast<size_t>(N + 1));
  for (int d = 0; d <= N; ++d) {
    int k = N - d;
    for (auto& [e, c] : coef[static_cast<size_t>(d)]) {
      int sexp = (2 * n - 1) * k;
      TMono mono(n);
      for (int i = 1; i <= n + 1; ++i) {
        int a = e.ex[static_cast<size_t>(i - 1)];
        mono.ev[static_cast<size_t>(i - 1)] = a;
        sexp -= a * (n + 1 - i) * i;
      }
      for (int j = 1; j <= n; ++j) {
        int b = e.ey[static_cast<size_t>(j - 1)];
        mono.ew[static_cast<size_t>(j - 1)] = b;
        sexp -= b * (n - j) * j;
      }
      tpoly_add(h.coef[static_cast<size_t>(d)], mono, SLaurent::monomial(sexp, c));
    }
    if (!tpoly_even_powers(h.coef[static_cast<size_t>(d)]))
      throw normalization_error("satake_substitute: odd s-power in z^" + std::to_string(d) +
                                " coefficient (wrong t-exponent)");
  }
  return h;
}

inline HeckePoly build_hecke_polynomial(int n) {
  HeckePoly h = satake_substitute(expand_product(n), n);
  int N = n * (n + 1);
  const TPoly& lead = h.coef[static_cast<size_t>(N)];
  if (lead.size() != 1 || !lead.begin()->first.is_one() || lead.begin()->second != SLaurent(1))
    throw internal_error("build_hecke_polynomial: non-monic result");
  return h;
}

// s^2 |-> q, coefficient by coefficient.
inline std::vector<std::map<TMono, Rational>> specialize(const HeckePoly& h, long long q) {
  std::vector<std::map<TMono, Rational>> out(h.coef.size());
  for (size_t d = 0; d < h.coef.size(); ++d)
    for (auto& [m, c] : h.coef[d]) out[d].emplace(m, c.specialize(q));
  return out;
}

// ---------------------------------------------------------------------------
// Fixture format: one line per z-coefficient, monomials in fixture order,
// e.g. "z^4 : s^2*T2V*T1W^2 - 2*s^4*T2V*T2W + s^2*T1V^2*T2W"

inline std::string render_tpoly(const TPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [mono, coef] : p) {
    for (auto& [e, c] : coef.terms()) {
      long long a = c;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      std::vector<std::string> parts;
      if (a != 1 || (e == 0 && mono.is_one())) parts.push_back(std::to_string(a));
      if (e != 0) parts.push_back(e == 1 ? "s" : "s^" + std::to_string(e));
      if (!mono.is_one()) parts.push_back(mono.str());
      for (size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    }
  }
  return os.str();
}

inline std::string to_fixture(const HeckePoly& h) {
  std::ostringstream os;
  for (int d = h.degree(); d >= 0; --d)
    os << "z^" << d << " : " << render_tpoly(h.coef[static_cast<size_t>(d)]) << "\n";
  return os.str();
}

}  // namespace heckelab
