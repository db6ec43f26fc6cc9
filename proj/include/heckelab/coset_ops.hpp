#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "heckelab/formal_sum.hpp"
#include "heckelab/group.hpp"
#include "heckelab/tpoly.hpp"

namespace heckelab {

// Gaussian binomial [m choose k]_q via the q-Pascal recursion
// [i j]_q = [i-1 j]_q + q^{i-j} [i-1 j-1]_q; stays in integers.
inline long long gaussian_binomial(int m, int k, long long q) {
  if (k < 0 || k > m) return 0;
  std::vector<std::vector<long long>> c(static_cast<size_t>(m + 1),
                                        std::vector<long long>(static_cast<size_t>(m + 1), 0));
  c[0][0] = 1;
  for (int i = 1; i <= m; ++i) {
    c[static_cast<size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j) {
      long long qp = 1;
      for (int t = 0; t < i - j; ++t) qp *= q;
      c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          c[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
          qp * c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    }
  }
  return c[static_cast<size_t>(m)][static_cast<size_t>(k)];
}

// Lifts of O/w^k: polynomials with coefficients 0..q-1 on w^0..w^{k-1}.
inline std::vector<Laurent> sk_lifts(long long q, int k) {
  std::vector<Laurent> out;
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= q;
  out.reserve(static_cast<size_t>(total));
  for (long long v = 0; v < total; ++v) {
    Laurent l(q);
    long long x = v;
    for (int i = 0; i < k; ++i) {
      l.set_coeff(i, x % q);
      x /= q;
    }
    out.push_back(l);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Minuscule double-coset decomposition K lambda_k(w) K = |_| g_i K in GL_m

struct MinusculeCochar {
  int factor_size;  // m: n+1 for the V factor, n for the W factor
  int k;            // lambda_k = diag(w,...,w,1,...,1) with k entries w
};

// Explicit representative family: one k-subset S of the rows carries diagonal
// w, with a residue entry in each slot (i,j), i in S, j not in S, i < j.
// Every representative is already in column-Hermite form.
inline std::vector<HermiteForm> decompose_double_coset_forms(int m, int k, long long q) {
  if (k < 0 || k > m) throw domain_error("decompose_double_coset: bad k");
  std::vector<HermiteForm> out;
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i + 1; j < m; ++j)
        if (!(mask >> j & 1)) slots.push_back({i, j});
    }
    long long total = 1;
    for (size_t t = 0; t < slots.size(); ++t) total *= q;
    for (long long v = 0; v < total; ++v) {
      HermiteForm h;
      h.m = m;
      h.q = q;
      h.diag.resize(static_cast<size_t>(m));
      h.upper.assign(static_cast<size_t>(m * (m - 1) / 2), Laurent::zero(q));
      for (int i = 0; i < m; ++i) h.diag[static_cast<size_t>(i)] = (mask >> i) & 1;
      long long x = v;
      for (auto& [i, j] : slots) {
        h.entry(i, j) = Laurent(q, x % q);
        x /= q;
      }
      out.push_back(std::move(h));
    }
  }
  return out;
}

inline std::vector<Mat> decompose_double_coset(const MinusculeCochar& lam, long long q) {
  std::vector<Mat> out;
  for (auto& h : decompose_double_coset_forms(lam.factor_size, lam.k, q)) out.push_back(h.to_mat());
  return out;
}

// Independent oracle: enumerate all Hermite forms of determinant valuation k
// whose column lattice contains w O^m (a diagonal exponent >= 2 would force an
// elementary divisor >= 2), keep those with Cartan invariants lambda_k, and
// dedupe by key.
inline std::set<std::string> decompose_double_coset_oracle(int m, int k, long long q) {
  std::set<std::string> keys;
  std::vector<int> target(static_cast<size_t>(m), 0);
  for (int i = 0; i < k; ++i) target[static_cast<size_t>(i)] = 1;
  for (int mask = 0; mask < (1 << m); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    // entry (i,j), i<j, ranges over O/w^{e_i}
    std::vector<std::pair<int, int>> free_slots;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1)
        for (int j = i + 1; j < m; ++j) free_slots.push_back({i, j});
    long long total = 1;
    for (size_t t = 0; t < free_slots.size(); ++t) total *= q;
    for (long long v = 0; v < total; ++v) {
      HermiteForm h;
      h.m = m;
      h.q = q;
      h.diag.resize(static_cast<size_t>(m));
      h.upper.assign(static_cast<size_t>(m * (m - 1) / 2), Laurent::zero(q));
      for (int i = 0; i < m; ++i) h.diag[static_cast<size_t>(i)] = (mask >> i) & 1;
      long long x = v;
      for (auto& [i, j] : free_slots) {
        h.entry(i, j) = Laurent(q, x % q);
        x /= q;
      }
      if (cartan_invariants(h.to_mat()) == target) keys.insert(h.token());
    }
  }
  return keys;
}

// ---------------------------------------------------------------------------
// Right Hecke action on Z[G/K]

using GKSum = FormalSum<std::string, Rational>;

class HeckeAction {
 public:
  HeckeAction(int n, long long q) : n_(n), q_(q) {}

  int n() const { return n_; }
  long long q() const { return q_; }

  const std::vector<Mat>& reps(bool v_factor, int k) {
    auto& cache = v_factor ? repV_ : repW_;
    auto it = cache.find(k);
    if (it == cache.end()) {
      int m = v_factor ? n_ + 1 : n_;
      it = cache.emplace(k, decompose_double_coset({m, k}, q_)).first;
    }
    return it->second;
  }

  // One generator T_{k,V} or T_{k,W} by right convolution.
  GKSum apply_generator(bool v_factor, int k, const GKSum& x) {
    const std::vector<Mat>& gs = reps(v_factor, k);
    GKSum out;
    for (auto& [key, c] : x.terms()) {
      GroupElem g = gk_representative(key, q_);
      for (const Mat& gi : gs) {
        GroupElem t = v_factor ? GroupElem{g.g1 * gi, g.g2} : GroupElem{g.g1, g.g2 * gi};
        out.add(gk_key(t), c);
      }
    }
    return out;
  }

  // Monomial in the commuting generators; factor order is immaterial.
  GKSum apply_monomial(const TMono& mono, GKSum x) {
    for (size_t k = 0; k < mono.ev.size(); ++k)
      for (int rep = 0; rep < mono.ev[k]; ++rep) x = apply_generator(true, static_cast<int>(k) + 1, x);
    for (size_t k = 0; k < mono.ew.size(); ++k)
      for (int rep = 0; rep < mono.ew[k]; ++rep) x = apply_generator(false, static_cast<int>(k) + 1, x);
    return x;
  }

  // A full Hecke-algebra element with rational coefficients.
  GKSum apply(const std::map<TMono, Rational>& op, const GKSum& x) {
    GKSum out;
    for (auto& [mono, coef] : op) out += apply_monomial(mono, x).scaled(coef);
    return out;
  }

 private:
  int n_;
  long long q_;
  std::map<int, std::vector<Mat>> repV_, repW_;
};

// Key-wise left translation; commutes with the right Hecke action.
inline GKSum left_translate_gk(const GroupElem& h, const GKSum& x, long long q) {
  GKSum out;
  for (auto& [key, c] : x.terms()) out.add(gk_key(h * gk_representative(key, q)), c);
  return out;
}

}  // namespace heckelab
