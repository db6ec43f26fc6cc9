#pragma once

#include <set>
#include <vector>

#include "heckelab/laurent.hpp"
#include "heckelab/rational.hpp"

namespace heckelab {

// Parameters of the local order O_{v,c} = O_F + w^c O_E.
struct LocalOrderParams {
  long long q = 3;
  int eps = +1;  // +1 split, -1 inert
  int c = 0;
};

// #(O_{v,0}^* / O_{v,c}^*) = q^{c-1} (q - eps) for c >= 1, and 1 for c = 0.
inline long long unit_index(const LocalOrderParams& p) {
  if (p.c == 0) return 1;
  long long r = p.q - p.eps;
  for (int i = 1; i < p.c; ++i) r *= p.q;
  return r;
}

// #(O_{v,c}^* / O_{v,c+k}^*) = q^k for c >= k > 0 (the infinitesimal-
// deformation unit quotient (F^k[eps])^* / (F^k)^*).
inline long long step_index(long long q, int c, int k) {
  if (!(c >= k && k > 0)) throw domain_error("step_index: requires c >= k > 0");
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

// Degree of K(pf)/K(f): (q - eps)/u(r) with u(r) = 1 for r >= 1 and u(0)
// supplied by the caller (it depends on global data).
struct GaloisDegree {
  Rational value;
  bool integral;
};

inline GaloisDegree galois_degree(long long q, int eps, int r, long long u0) {
  if (u0 < 1) throw domain_error("galois_degree: u0 >= 1 required");
  long long u = (r >= 1) ? 1 : u0;
  Rational v(q - eps, u);
  return {v, v.is_integer()};
}

// ---------------------------------------------------------------------------
// Brute-force oracles

namespace orders_detail {

// F_{q^2} = F_q[t]/(t^2 - alpha t - beta), found by searching for an
// irreducible monic quadratic.
struct Fq2 {
  long long q, alpha, beta;

  static Fq2 make(long long q) {
    for (long long alpha = 0; alpha < q; ++alpha)
      for (long long beta = 0; beta < q; ++beta) {
        bool root = false;
        for (long long t = 0; t < q && !root; ++t)
          if (fq::norm(t * t - alpha * t - beta, q) == 0) root = true;
        if (!root) return {q, alpha, beta};
      }
    throw internal_error("Fq2: no irreducible quadratic found");
  }

  using Elem = std::pair<long long, long long>;  // a + b t
  Elem mul(Elem x, Elem y) const {
    // (a + bt)(c + dt) = ac + beta bd + (ad + bc + alpha bd) t
    long long bd = fq::mul(x.second, y.second, q);
    long long a = fq::norm(x.first * y.first + beta * bd, q);
    long long b = fq::norm(x.first * y.second + x.second * y.first + alpha * bd, q);
    return {a, b};
  }
};

// Truncated ring O_E / w^prec in the split model: pairs of O/w^prec with
// componentwise operations; elements encoded as vectors of residue pairs.
struct SplitVec {
  std::vector<std::pair<long long, long long>> v;  // coefficient pairs per w-power
  friend bool operator<(const SplitVec& a, const SplitVec& b) { return a.v < b.v; }
};

inline SplitVec split_mul(const SplitVec& x, const SplitVec& y, long long q) {
  size_t n = x.v.size();
  SplitVec r;
  r.v.assign(n, {0, 0});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) {
      r.v[i + j].first = fq::norm(r.v[i + j].first + x.v[i].first * y.v[j].first, q);
      r.v[i + j].second = fq::norm(r.v[i + j].second + x.v[i].second * y.v[j].second, q);
    }
  return r;
}

// O_E / w^prec in the inert model: vectors of F_{q^2} coefficients.
struct InertVec {
  std::vector<Fq2::Elem> v;
  friend bool operator<(const InertVec& a, const InertVec& b) { return a.v < b.v; }
};

inline InertVec inert_mul(const InertVec& x, const InertVec& y, const Fq2& f) {
  size_t n = x.v.size();
  InertVec r;
  r.v.assign(n, {0, 0});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) {
      auto p = f.mul(x.v[i], y.v[j]);
      r.v[i + j].first = fq::add(r.v[i + j].first, p.first, f.q);
      r.v[i + j].second = fq::add(r.v[i + j].second, p.second, f.q);
    }
  return r;
}

// Generic count of |G / S| by orbit sweeping; S must be a subgroup of the
// finite abelian group G (given as multiplication closure of its elements).
template <class Elem, class Mul>
long long coset_count(const std::vector<Elem>& G, const std::vector<Elem>& S, Mul mul) {
  std::set<Elem> seen;
  long long orbits = 0;
  for (const Elem& g : G) {
    if (seen.count(g)) continue;
    ++orbits;
    for (const Elem& s : S) seen.insert(mul(g, s));
  }
  return orbits;
}

}  // namespace orders_detail

// Enumerates O_{v,0}^* / O_{v,c}^* in the chosen model at w-precision c and
// counts cosets directly.  SKIPs (returns -1) above the cap.
inline long long bruteforce_unit_index(long long q, int eps, int c, long long cap = 2000000) {
  using namespace orders_detail;
  if (c == 0) return 1;
  long long size_guess = 1;
  for (int i = 0; i < 2 * c; ++i) size_guess *= q;
  if (size_guess > cap) return -1;
  if (eps == +1) {
    // units of (O/w^c)^2 modulo the congruence subgroup x = y mod w^c
    std::vector<SplitVec> G, S;
    long long total = size_guess;
    for (long long it = 0; it < total; ++it) {
      long long x = it;
      SplitVec e;
      e.v.resize(static_cast<size_t>(c));
      for (int i = 0; i < c; ++i) {
        e.v[static_cast<size_t>(i)].first = x % q;
        x /= q;
        e.v[static_cast<size_t>(i)].second = x % q;
        x /= q;
      }
      if (e.v[0].first == 0 || e.v[0].second == 0) continue;  // not a unit
      G.push_back(e);
      bool diag = true;
      for (int i = 0; i < c; ++i)
        if (e.v[static_cast<size_t>(i)].first != e.v[static_cast<size_t>(i)].second) diag = false;
      if (diag) S.push_back(e);
    }
    return coset_count(G, S, [&](const SplitVec& a, const SplitVec& b) { return split_mul(a, b, q); });
  }
  // inert: units of O_E/w^c modulo the image of (O_F/w^c)^*
  Fq2 f = Fq2::make(q);
  std::vector<InertVec> G, S;
  long long per = q * q;
  long long total = 1;
  for (int i = 0; i < c; ++i) total *= per;
  for (long long it = 0; it < total; ++it) {
    long long x = it;
    InertVec e;
    e.v.resize(static_cast<size_t>(c));
    for (int i = 0; i < c; ++i) {
      e.v[static_cast<size_t>(i)].first = x % q;
      x /= q;
      e.v[static_cast<size_t>(i)].second = x % q;
      x /= q;
    }
    if (e.v[0].first == 0 && e.v[0].second == 0) continue;  // not a unit in F_{q^2}
    G.push_back(e);
    bool rational = true;
    for (int i = 0; i < c; ++i)
      if (e.v[static_cast<size_t>(i)].second != 0) rational = false;
    if (rational) S.push_back(e);
  }
  return coset_count(G, S, [&](const InertVec& a, const InertVec& b) { return inert_mul(a, b, f); });
}

// Split-model oracle for the step index: O_{v,c}^* / O_{v,c+k}^* at
// precision c+k.
inline long long bruteforce_step_index(long long q, int c, int k, long long cap = 2000000) {
  using namespace orders_detail;
  int prec = c + k;
  long long total = 1;
  for (int i = 0; i < 2 * prec; ++i) total *= q;
  if (total > cap) return -1;
  std::vector<SplitVec> G, S;
  for (long long it = 0; it < total; ++it) {
    long long x = it;
    SplitVec e;
    e.v.resize(static_cast<size_t>(prec));
    for (int i = 0; i < prec; ++i) {
      e.v[static_cast<size_t>(i)].first = x % q;
      x /= q;
      e.v[static_cast<size_t>(i)].second = x % q;
      x /= q;
    }
    if (e.v[0].first == 0 || e.v[0].second == 0) continue;
    // O_{v,m} = { (x,y) : x = y mod w^m }: coefficient pairs below m agree
    bool congruent_c = true, congruent_ck = true;
    for (int i = 0; i < prec; ++i) {
      if (e.v[static_cast<size_t>(i)].first == e.v[static_cast<size_t>(i)].second) continue;
      congruent_ck = false;
      if (i < c) congruent_c = false;
    }
    if (!congruent_c) continue;
    G.push_back(e);
    if (congruent_ck) S.push_back(e);
  }
  return coset_count(G, S, [&](const SplitVec& a, const SplitVec& b) { return split_mul(a, b, q); });
}

}  // namespace heckelab
