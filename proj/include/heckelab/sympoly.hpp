#pragma once

#include <map>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/rational.hpp"

namespace heckelab {

// Monomial in the raw variables x_1..x_{n+1}, y_1..y_n.
struct XYMono {
  std::vector<int> xe, ye;

  int total() const {
    int d = 0;
    for (int e : xe) d += e;
    for (int e : ye) d += e;
    return d;
  }
  // graded lexicographic on (x-exponents, y-exponents)
  friend bool operator<(const XYMono& a, const XYMono& b) {
    int ta = a.total(), tb = b.total();
    if (ta != tb) return ta < tb;
    if (a.xe != b.xe) return a.xe < b.xe;
    return a.ye < b.ye;
  }
  friend bool operator==(const XYMono& a, const XYMono& b) { return a.xe == b.xe && a.ye == b.ye; }
};

using XYPoly = std::map<XYMono, long long>;

inline void xy_add(XYPoly& p, const XYMono& m, long long c) {
  if (!c) return;
  auto [it, ins] = p.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (!it->second) p.erase(it);
  }
}

inline XYPoly xy_mul(const XYPoly& a, const XYPoly& b) {
  XYPoly r;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      XYMono m = ma;
      for (size_t i = 0; i < m.xe.size(); ++i) m.xe[i] += mb.xe[i];
      for (size_t i = 0; i < m.ye.size(); ++i) m.ye[i] += mb.ye[i];
      xy_add(r, m, detail::checked_narrow((__int128)ca * cb, "XYPoly"));
    }
  return r;
}

// Elementary symmetric polynomial e_k of the x-block (in_x) or y-block.
inline XYPoly xy_elementary(int nx, int ny, bool in_x, int k) {
  int m = in_x ? nx : ny;
  XYPoly r;
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    XYMono mo;
    mo.xe.assign(static_cast<size_t>(nx), 0);
    mo.ye.assign(static_cast<size_t>(ny), 0);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) (in_x ? mo.xe : mo.ye)[static_cast<size_t>(i)] = 1;
    xy_add(r, mo, 1);
  }
  return r;
}

// Monomial in the elementary symmetric functions X_1..X_{n+1}, Y_1..Y_n.
struct EMono {
  std::vector<int> ex, ey;
  friend bool operator<(const EMono& a, const EMono& b) {
    if (a.ex != b.ex) return a.ex < b.ex;
    return a.ey < b.ey;
  }
};

using EPoly = std::map<EMono, long long>;

// Expansion of prod X_i^{ex_i} * prod Y_j^{ey_j} back into raw variables;
// memoized across reduction steps.
class ElementaryExpander {
 public:
  ElementaryExpander(int nx, int ny) : nx_(nx), ny_(ny) {}

  const XYPoly& expand(const EMono& e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    XYPoly r;
    XYMono one;
    one.xe.assign(static_cast<size_t>(nx_), 0);
    one.ye.assign(static_cast<size_t>(ny_), 0);
    xy_add(r, one, 1);
    for (size_t i = 0; i < e.ex.size(); ++i)
      for (int t = 0; t < e.ex[i]; ++t) r = xy_mul(r, base(true, static_cast<int>(i) + 1));
    for (size_t j = 0; j < e.ey.size(); ++j)
      for (int t = 0; t < e.ey[j]; ++t) r = xy_mul(r, base(false, static_cast<int>(j) + 1));
    return cache_.emplace(e, std::move(r)).first->second;
  }

 private:
  const XYPoly& base(bool in_x, int k) {
    auto& c = in_x ? bx_ : by_;
    auto it = c.find(k);
    if (it == c.end()) it = c.emplace(k, xy_elementary(nx_, ny_, in_x, k)).first;
    return it->second;
  }

  int nx_, ny_;
  std::map<EMono, XYPoly> cache_;
  std::map<int, XYPoly> bx_, by_;
};

// Classical leading-monomial elimination: rewrite a polynomial that is
// symmetric in the x's and in the y's separately in the X/Y basis.
// A leading monomial with non-sorted exponents means the input was not
// bi-symmetric, which indicates a bug upstream.
inline EPoly reduce_to_elementary(XYPoly p, ElementaryExpander& ex) {
  EPoly out;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    const XYMono& m = lead->first;
    long long c = lead->second;
    for (size_t i = 0; i + 1 < m.xe.size(); ++i)
      if (m.xe[i] < m.xe[i + 1]) throw internal_error("symmetric reduction: non-symmetric residue");
    for (size_t j = 0; j + 1 < m.ye.size(); ++j)
      if (m.ye[j] < m.ye[j + 1]) throw internal_error("symmetric reduction: non-symmetric residue");
    EMono e;
    e.ex.resize(m.xe.size());
    e.ey.resize(m.ye.size());
    for (size_t i = 0; i < m.xe.size(); ++i)
      e.ex[i] = m.xe[i] - (i + 1 < m.xe.size() ? m.xe[i + 1] : 0);
    for (size_t j = 0; j < m.ye.size(); ++j)
      e.ey[j] = m.ye[j] - (j + 1 < m.ye.size() ? m.ye[j + 1] : 0);
    const XYPoly& g = ex.expand(e);
    for (auto& [gm, gc] : g)
      xy_add(p, gm, detail::checked_narrow(-(__int128)gc * c, "reduce_to_elementary"));
    auto [it, ins] = out.try_emplace(e, c);
    if (!ins) {
      it->second += c;
      if (!it->second) out.erase(it);
    }
  }
  return out;
}

}  // namespace heckelab
