#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/coset_ops.hpp"
#include "heckelab/formal_sum.hpp"
#include "heckelab/group.hpp"

namespace heckelab {

// ---------------------------------------------------------------------------
// Normal form in H \ G / K
//
// Every class has a representative
//   ( [ diag(w^{a_1..a_n}) | (1,...,1)^t ],  diag(w^{b_1..b_n}) )
//   ( [        0           |    w^c     ]                      )
// with a non-increasing, a_n >= 0, b non-decreasing.  The reduction below
// is fully constructive and tracks the H-element it applies, so the
// determinant witness (and hence the refined class data) is exact.

struct NormalForm {
  int c = 0;
  std::vector<int> a;  // non-increasing, >= 0
  std::vector<int> b;  // non-decreasing

  friend bool operator==(const NormalForm& x, const NormalForm& y) {
    return x.c == y.c && x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const NormalForm& x, const NormalForm& y) {
    if (x.c != y.c) return x.c < y.c;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(c=" << c << "; a=";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << "; b=";
    for (size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
  }
};

// The canonical representative attached to a normal form.
inline GroupElem normal_form_rep(const NormalForm& nf, long long q) {
  int n = static_cast<int>(nf.a.size());
  Mat g1(n + 1, q);
  for (int i = 0; i < n; ++i) {
    g1.at(i, i) = FieldElem::uniformizer(q, nf.a[static_cast<size_t>(i)]);
    g1.at(i, n) = FieldElem::one(q);
  }
  g1.at(n, n) = FieldElem::uniformizer(q, nf.c);
  return {g1, Mat::diag_pi(nf.b, q)};
}

struct ReductionResult {
  NormalForm nf;
  // witness: g = embed_delta(h_witness) * rep(nf) * k for some k in K
  Mat h_witness;
  FieldElem det_witness;  // det(h_witness)
};

inline ReductionResult normal_form(const GroupElem& g, bool verify = false) {
  const int n = g.n();
  const long long q = g.q();
  if (!g.g1.invertible() || !g.g2.invertible())
    throw domain_error("normal_form: singular input");

  // Accumulated left H-multiplier ell:  (X, 1) = Delta(ell) * g * k.
  Mat ell = g.g2.inverse();
  Mat x = embed_iota(ell) * g.g1;

  // Clear the bottom row by right column operations, pivot of minimal
  // valuation, leaving (0, ..., 0, w^C).
  int bj = -1, bv = kValInfinity;
  for (int j = 0; j <= n; ++j) {
    int v = x.at(n, j).val();
    if (v < bv) { bv = v; bj = j; }
  }
  if (bj != n)
    for (int r = 0; r <= n; ++r) std::swap(x.at(r, bj), x.at(r, n));
  {
    FieldElem u = FieldElem::uniformizer(q, bv) / x.at(n, n);
    for (int r = 0; r <= n; ++r) x.at(r, n) *= u;
    for (int j = 0; j < n; ++j) {
      if (x.at(n, j).is_zero()) continue;
      FieldElem f = x.at(n, j) / x.at(n, n);
      for (int r = 0; r <= n; ++r) x.at(r, j) -= f * x.at(r, n);
    }
  }
  const int C = bv;

  // Cartan-reduce the upper block.
  Mat block(n, q);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) block.at(i, j) = x.at(i, j);
  CartanTransforms ct = cartan_with_transforms(block);
  std::vector<int> A = ct.inv;
  std::vector<FieldElem> f(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    FieldElem acc = FieldElem::zero(q);
    for (int j = 0; j < n; ++j) acc += ct.left.at(i, j) * x.at(j, n);
    f[static_cast<size_t>(i)] = acc;
  }
  ell = ct.left * ell;

  // Reduce the last column mod w^{A_i}, force nonzero entries, and strip
  // units by a diagonal conjugation; afterwards f_i = w^{B_i} exactly and
  // only the integer data (A, B) evolves.
  std::vector<int> B(static_cast<size_t>(n));
  Mat conj = Mat::identity(n, q);
  for (int i = 0; i < n; ++i) {
    Laurent red = f[static_cast<size_t>(i)].truncate(A[static_cast<size_t>(i)]);
    if (red.is_zero()) {
      B[static_cast<size_t>(i)] = A[static_cast<size_t>(i)];  // column_{n+1} += column_i
    } else {
      B[static_cast<size_t>(i)] = red.val();
      FieldElem unit = FieldElem(red) / FieldElem::uniformizer(q, red.val());
      conj.at(i, i) = unit.inverse();
    }
  }
  ell = conj * ell;

  // Constraint loop; every step strictly decreases sum(B) and stays bounded,
  // so it terminates.  Unit renormalizations contribute diag factors to ell.
  auto conj_at = [&](int i, const FieldElem& d) {
    Mat m = Mat::identity(n, q);
    m.at(i, i) = d;
    ell = m * ell;
  };
  auto elem_left = [&](int dst, int src, const FieldElem& t) {
    Mat m = Mat::identity(n, q);
    m.at(dst, src) = t;
    ell = m * ell;
  };
  while (true) {
    if (B[static_cast<size_t>(n - 1)] > A[static_cast<size_t>(n - 1)]) {
      // last-column fix: f_n += w^{A_n}, then renormalize the unit
      FieldElem u = FieldElem::one(q) +
                    FieldElem::uniformizer(q, B[static_cast<size_t>(n - 1)] - A[static_cast<size_t>(n - 1)]);
      conj_at(n - 1, u.inverse());
      B[static_cast<size_t>(n - 1)] = A[static_cast<size_t>(n - 1)];
      continue;
    }
    int sk = -1, sl = -1;
    for (int k = 0; k < n && sk < 0; ++k)
      for (int l = k + 1; l < n; ++l)
        if (B[static_cast<size_t>(k)] < B[static_cast<size_t>(l)]) { sk = k; sl = l; break; }
    if (sk >= 0) {
      // (*): replace B_l by B_k via row_l += row_k and a unit conjugation
      elem_left(sl, sk, FieldElem::one(q));
      FieldElem u = FieldElem::one(q) +
                    FieldElem::uniformizer(q, B[static_cast<size_t>(sl)] - B[static_cast<size_t>(sk)]);
      conj_at(sl, u.inverse());
      B[static_cast<size_t>(sl)] = B[static_cast<size_t>(sk)];
      continue;
    }
    int ck = -1, cl = -1, cbest = 0;
    for (int k = 0; k < n && ck < 0; ++k) {
      for (int l = k + 1; l < n; ++l) {
        int c_kl = (B[static_cast<size_t>(k)] - B[static_cast<size_t>(l)]) -
                   (A[static_cast<size_t>(k)] - A[static_cast<size_t>(l)]);
        if (c_kl > cbest) { cbest = c_kl; ck = k; cl = l; }
      }
      if (ck >= 0) break;
    }
    if (ck >= 0) {
      // c_{k,l} step: row_k += w^{A_k - A_l} row_l, renormalize, clear
      elem_left(ck, cl, FieldElem::uniformizer(q, A[static_cast<size_t>(ck)] - A[static_cast<size_t>(cl)]));
      FieldElem u = FieldElem::one(q) + FieldElem::uniformizer(q, cbest);
      conj_at(ck, u.inverse());
      B[static_cast<size_t>(ck)] -= cbest;
      continue;
    }
    break;
  }

  ReductionResult out;
  out.nf.c = C;
  out.nf.a.resize(static_cast<size_t>(n));
  out.nf.b.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.nf.a[static_cast<size_t>(i)] = A[static_cast<size_t>(i)] - B[static_cast<size_t>(i)];
    out.nf.b[static_cast<size_t>(i)] = -B[static_cast<size_t>(i)];
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (out.nf.a[static_cast<size_t>(i)] < out.nf.a[static_cast<size_t>(i + 1)] ||
        out.nf.b[static_cast<size_t>(i)] > out.nf.b[static_cast<size_t>(i + 1)])
      throw internal_error("normal_form: constraint loop ended unsorted");
  }
  if (out.nf.a[static_cast<size_t>(n - 1)] < 0)
    throw internal_error("normal_form: negative a_n after reduction");

  // (X_final, 1) = Delta(ell) g k and rep = Delta(diag(b)) (X_final, 1),
  // so g = Delta(h_witness) rep k' with h_witness = (diag(b) ell)^{-1}.
  Mat db = Mat::diag_pi(out.nf.b, q);
  out.h_witness = (db * ell).inverse();
  out.det_witness = out.h_witness.det();

  if (verify) {
    GroupElem rep = normal_form_rep(out.nf, q);
    GroupElem k = (embed_delta(out.h_witness) * rep).inverse() * g;
    if (!is_member(k, SubgroupSpec::K()))
      throw internal_error("normal_form: witness verification failed");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Class invariant, stabilizer determinants, conductors

struct ClassInvariant {
  int c = 0;
  std::vector<int> d;  // a - b

  friend bool operator==(const ClassInvariant& x, const ClassInvariant& y) {
    return x.c == y.c && x.d == y.d;
  }
  friend bool operator<(const ClassInvariant& x, const ClassInvariant& y) {
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
  }
};

inline ClassInvariant class_invariant(const NormalForm& nf) {
  ClassInvariant ci;
  ci.c = nf.c;
  ci.d.resize(nf.a.size());
  for (size_t i = 0; i < nf.a.size(); ++i) ci.d[i] = nf.a[i] - nf.b[i];
  return ci;
}

struct StabDetDescriptor {
  bool all_units = false;
  int m = 0;  // congruence exponent when not all_units; m >= 1

  friend bool operator==(const StabDetDescriptor& x, const StabDetDescriptor& y) {
    return x.all_units == y.all_units && x.m == y.m;
  }
  std::string str() const { return all_units ? "O^*" : "1+w^" + std::to_string(m) + "O"; }
};

// det(Stab_H(gK)) for g = (w^c [diag(w^{a_i}) | 1s], diag(w^{b_i})):
// all of O^* if some a_i <= 0 or some off-diagonal c_ij <= 0, otherwise
// 1 + w^m O with m = min({a_i} u {c_ij}), c_ij = max(a_i-a_j, b_i-b_j).
inline StabDetDescriptor stabilizer_det(const std::vector<int>& a, const std::vector<int>& b) {
  int n = static_cast<int>(a.size());
  int m = kValInfinity;
  for (int i = 0; i < n; ++i) {
    if (a[static_cast<size_t>(i)] <= 0) return {true, 0};
    m = std::min(m, a[static_cast<size_t>(i)]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int cij = std::max(a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)],
                         b[static_cast<size_t>(i)] - b[static_cast<size_t>(j)]);
      if (cij <= 0) return {true, 0};
      m = std::min(m, cij);
    }
  return {false, m};
}

// Stabilizer parameters of the canonical representative: the first factor is
// w^c [diag(w^{a_i}) | 1s] exactly when the column parameters are shifted by c.
inline StabDetDescriptor stabilizer_det(const NormalForm& nf) {
  std::vector<int> b = nf.b;
  for (int& v : b) v += nf.c;
  return stabilizer_det(nf.a, b);
}

inline int conductor(const NormalForm& nf) {
  StabDetDescriptor d = stabilizer_det(nf);
  return d.all_units ? 0 : d.m;
}

// ---------------------------------------------------------------------------
// Refined class keys for the H^der / H_0 / H_1 quotients

enum class Level { Hder, H0, H1 };

inline std::string level_name(Level l) {
  switch (l) {
    case Level::Hder: return "hder";
    case Level::H0: return "h0";
    case Level::H1: return "h1";
  }
  return "?";
}

// Complete class datum: the normal form pins the H-class; shift and the
// conductor-truncated unit class pin the fiber of the finer quotient.
struct RefinedKey {
  NormalForm nf;
  long long shift = 0;
  int cond = 0;       // stabilizer conductor of the H-class
  int unit_prec = 0;  // truncation level of `unit` as dictated by the level
  Laurent unit;       // det-witness unit class mod w^{unit_prec}; zero-width if unit_prec = 0

  friend bool operator==(const RefinedKey& x, const RefinedKey& y) {
    return x.nf == y.nf && x.shift == y.shift && x.unit_prec == y.unit_prec && x.unit == y.unit;
  }
  friend bool operator<(const RefinedKey& x, const RefinedKey& y) {
    if (!(x.nf == y.nf)) return x.nf < y.nf;
    if (x.shift != y.shift) return x.shift < y.shift;
    if (x.unit_prec != y.unit_prec) return x.unit_prec < y.unit_prec;
    return x.unit < y.unit;
  }

  std::string str() const {
    std::ostringstream os;
    ClassInvariant ci = class_invariant(nf);
    os << "(c=" << nf.c << "; d=";
    for (size_t i = 0; i < ci.d.size(); ++i) os << (i ? "," : "") << ci.d[i];
    os << "; b=";
    for (size_t i = 0; i < nf.b.size(); ++i) os << (i ? "," : "") << nf.b[i];
    os << "; m=" << shift;
    if (unit_prec > 0) os << "; u=" << unit.str() << " mod w^" << unit_prec;
    os << ")";
    return os.str();
  }
};

inline std::ostream& operator<<(std::ostream& os, const RefinedKey& k) { return os << k.str(); }

inline RefinedKey refine(const ReductionResult& r, Level level, long long q) {
  RefinedKey key;
  key.nf = r.nf;
  key.cond = conductor(r.nf);
  key.shift = r.det_witness.val();
  switch (level) {
    case Level::Hder: key.unit_prec = key.cond; break;
    case Level::H0: key.unit_prec = 0; break;
    case Level::H1: key.unit_prec = std::min(key.cond, 1); break;
  }
  if (key.unit_prec > 0) {
    FieldElem u = r.det_witness / FieldElem::uniformizer(q, static_cast<int>(key.shift));
    key.unit = u.truncate(key.unit_prec);
  } else {
    key.unit = Laurent::zero(q);
  }
  return key;
}

using RefinedSum = FormalSum<RefinedKey, Rational>;

// phi / phi_0 / phi_1: project a sum over G/K to refined class keys.
inline RefinedSum project(const GKSum& x, Level level, int /*n*/, long long q) {
  RefinedSum out;
  for (auto& [tok, coef] : x.terms()) {
    ReductionResult r = normal_form(gk_representative(tok, q));
    out.add(refine(r, level, q), coef);
  }
  return out;
}

// Left translation by h in H on a refined sum: the H-class is untouched and
// the determinant witness picks up det(h).  The level is already baked into
// the keys' unit precision.
inline RefinedSum left_translate(const GroupElem& h, const RefinedSum& x, Level /*level*/,
                                 long long q) {
  if (!is_member(h, SubgroupSpec::H())) throw domain_error("left_translate: h not in H");
  FieldElem dh = h.g2.det();
  int v = dh.val();
  FieldElem du = dh / FieldElem::uniformizer(q, v);
  RefinedSum out;
  for (auto& [key, coef] : x.terms()) {
    RefinedKey k = key;
    k.shift += v;
    if (k.unit_prec > 0) k.unit = (FieldElem(k.unit) * du).truncate(k.unit_prec);
    out.add(k, coef);
  }
  return out;
}

// Scalar-unit translation h = Delta(diag(u, 1, ..., 1)) given by a residue
// representative; enough for the trace operators.
inline GroupElem unit_scalar_h(int n, long long q, const Laurent& u) {
  Mat h = Mat::identity(n, q);
  h.at(0, 0) = FieldElem(u);
  return embed_delta(h);
}

// Tr_{1,0} x = sum over H_0/H_1 (unit classes of the residue field) of the
// translates of x; input must be H_1-invariant.
inline RefinedSum trace_1_0(const RefinedSum& x, int n, long long q) {
  // H_1-invariance: coefficients must be constant on (1 + w O)-orbits of the
  // unit class; keys with unit_prec <= 1 are automatically invariant.
  for (auto& [key, coef] : x.terms()) {
    if (key.unit_prec <= 1) continue;
    std::vector<Laurent> tails = sk_lifts(q, key.unit_prec - 1);
    for (const Laurent& t : tails) {
      FieldElem factor = FieldElem::one(q) + FieldElem(t.shifted(1));
      RefinedKey mate = key;
      mate.unit = (FieldElem(key.unit) * factor).truncate(key.unit_prec);
      if (x.coeff(mate) != coef)
        throw invariance_error("trace_1_0: input is not H_1-invariant at " + key.str());
    }
  }
  RefinedSum out;
  for (long long lam = 1; lam < q; ++lam)
    out += left_translate(unit_scalar_h(n, q, Laurent(q, lam)), x, Level::Hder, q);
  return out;
}

}  // namespace heckelab
