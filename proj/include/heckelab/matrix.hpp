#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/field_elem.hpp"

namespace heckelab {

// Square matrix over F = F_q((w)) with value semantics.
class Mat {
 public:
  Mat() : m_(0) {}
  Mat(int m, long long q) : m_(m), q_(q), e_(static_cast<size_t>(m) * m, FieldElem::zero(q)) {}

  static Mat identity(int m, long long q) {
    Mat r(m, q);
    for (int i = 0; i < m; ++i) r.at(i, i) = FieldElem::one(q);
    return r;
  }
  // diag(w^{a_1}, ..., w^{a_m})
  static Mat diag_pi(const std::vector<int>& a, long long q) {
    Mat r(static_cast<int>(a.size()), q);
    for (size_t i = 0; i < a.size(); ++i) r.at((int)i, (int)i) = FieldElem::uniformizer(q, a[i]);
    return r;
  }
  static Mat scalar(int m, const FieldElem& c) {
    Mat r(m, c.q());
    for (int i = 0; i < m; ++i) r.at(i, i) = c;
    return r;
  }

  int size() const { return m_; }
  long long q() const { return q_; }
  FieldElem& at(int i, int j) { return e_[static_cast<size_t>(i) * m_ + j]; }
  const FieldElem& at(int i, int j) const { return e_[static_cast<size_t>(i) * m_ + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.m_, x.q_);
    for (int i = 0; i < x.m_; ++i)
      for (int k = 0; k < x.m_; ++k) {
        const FieldElem& xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < x.m_; ++j) {
          if (y.at(k, j).is_zero()) continue;
          r.at(i, j) += xik * y.at(k, j);
        }
      }
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) { return x.m_ == y.m_ && x.e_ == y.e_; }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  FieldElem det() const {
    // Fraction-field Gaussian elimination on a copy.
    Mat a = *this;
    FieldElem d = FieldElem::one(q_);
    for (int s = 0; s < m_; ++s) {
      int p = -1;
      for (int i = s; i < m_; ++i)
        if (!a.at(i, s).is_zero()) { p = i; break; }
      if (p < 0) return FieldElem::zero(q_);
      if (p != s) {
        for (int j = s; j < m_; ++j) std::swap(a.at(p, j), a.at(s, j));
        d = -d;
      }
      d *= a.at(s, s);
      for (int i = s + 1; i < m_; ++i) {
        if (a.at(i, s).is_zero()) continue;
        FieldElem f = a.at(i, s) / a.at(s, s);
        for (int j = s; j < m_; ++j) a.at(i, j) -= f * a.at(s, j);
      }
    }
    return d;
  }

  bool invertible() const { return !det().is_zero(); }

  // Adjugate divided by determinant; stays in the fraction field throughout.
  Mat inverse() const {
    FieldElem d = det();
    if (d.is_zero()) throw domain_error("Mat: inverse of singular matrix");
    Mat r(m_, q_);
    if (m_ == 1) {
      r.at(0, 0) = d.inverse();
      return r;
    }
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        FieldElem c = minor_det(j, i);
        if (((i + j) & 1) != 0) c = -c;
        r.at(i, j) = c / d;
      }
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < m_; ++i) {
      os << "[";
      for (int j = 0; j < m_; ++j) os << (j ? ", " : "") << at(i, j).str();
      os << "]";
    }
    return os.str();
  }

 private:
  FieldElem minor_det(int di, int dj) const {
    Mat s(m_ - 1, q_);
    for (int i = 0, si = 0; i < m_; ++i) {
      if (i == di) continue;
      for (int j = 0, sj = 0; j < m_; ++j) {
        if (j == dj) continue;
        s.at(si, sj) = at(i, j);
        ++sj;
      }
      ++si;
    }
    return s.det();
  }

  int m_ = 0;
  long long q_ = 0;
  std::vector<FieldElem> e_;
};

// The embedding GL_n -> GL_{n+1}, h in the upper-left block and 1 at the corner.
inline Mat embed_iota(const Mat& h) {
  int n = h.size();
  Mat r(n + 1, h.q());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = h.at(i, j);
  r.at(n, n) = FieldElem::one(h.q());
  return r;
}

// ---------------------------------------------------------------------------
// Cartan invariants (Smith reduction over the valuation ring)

struct CartanTransforms {
  Mat left, right;         // left * g * right = diag_pi(inv), both in GL(O)
  std::vector<int> inv;    // descending
};

// Valuation-pivot Smith reduction.  Since the pivot has minimal valuation in
// the active submatrix, every elimination coefficient lies in O, so the
// accumulated transforms are integral with unit determinant.
inline CartanTransforms cartan_with_transforms(const Mat& g) {
  int m = g.size();
  long long q = g.q();
  Mat a = g;
  Mat L = Mat::identity(m, q), R = Mat::identity(m, q);
  std::vector<int> inv(static_cast<size_t>(m));
  for (int s = 0; s < m; ++s) {
    int bi = -1, bj = -1, bv = kValInfinity;
    for (int i = s; i < m; ++i)
      for (int j = s; j < m; ++j) {
        int v = a.at(i, j).val();
        if (v < bv) { bv = v; bi = i; bj = j; }
      }
    if (bi < 0 || bv == kValInfinity) throw domain_error("cartan_invariants: singular matrix");
    if (bi != s)
      for (int j = 0; j < m; ++j) { std::swap(a.at(bi, j), a.at(s, j)); std::swap(L.at(bi, j), L.at(s, j)); }
    if (bj != s)
      for (int i = 0; i < m; ++i) { std::swap(a.at(i, bj), a.at(i, s)); std::swap(R.at(i, bj), R.at(i, s)); }
    // Normalize the pivot to an exact power of w (scale the row by a unit).
    FieldElem u = FieldElem::uniformizer(q, bv) / a.at(s, s);
    for (int j = 0; j < m; ++j) { a.at(s, j) *= u; L.at(s, j) *= u; }
    for (int i = s + 1; i < m; ++i) {
      if (a.at(i, s).is_zero()) continue;
      FieldElem f = a.at(i, s) / a.at(s, s);
      for (int j = 0; j < m; ++j) { a.at(i, j) -= f * a.at(s, j); L.at(i, j) -= f * L.at(s, j); }
    }
    for (int j = s + 1; j < m; ++j) {
      if (a.at(s, j).is_zero()) continue;
      FieldElem f = a.at(s, j) / a.at(s, s);
      for (int i = 0; i < m; ++i) { a.at(i, j) -= f * a.at(i, s); R.at(i, j) -= f * R.at(i, s); }
    }
    inv[static_cast<size_t>(s)] = bv;
  }
  // Pivot valuations come out ascending; the Cartan convention is descending.
  CartanTransforms t;
  t.inv.assign(inv.rbegin(), inv.rend());
  Mat P(m, q);
  for (int i = 0; i < m; ++i) P.at(i, m - 1 - i) = FieldElem::one(q);
  t.left = P * L;
  t.right = R * P;  // P symmetric = its own transpose
  return t;
}

// Invariants only; same elimination without transform bookkeeping.
inline std::vector<int> cartan_invariants(const Mat& g) {
  int m = g.size();
  Mat a = g;
  std::vector<int> inv(static_cast<size_t>(m));
  for (int s = 0; s < m; ++s) {
    int bi = -1, bj = -1, bv = kValInfinity;
    for (int i = s; i < m; ++i)
      for (int j = s; j < m; ++j) {
        int v = a.at(i, j).val();
        if (v < bv) { bv = v; bi = i; bj = j; }
      }
    if (bi < 0 || bv == kValInfinity) throw domain_error("cartan_invariants: singular matrix");
    if (bi != s)
      for (int j = s; j < m; ++j) std::swap(a.at(bi, j), a.at(s, j));
    if (bj != s)
      for (int i = s; i < m; ++i) std::swap(a.at(i, bj), a.at(i, s));
    for (int i = s + 1; i < m; ++i) {
      if (a.at(i, s).is_zero()) continue;
      FieldElem f = a.at(i, s) / a.at(s, s);
      for (int j = s + 1; j < m; ++j) a.at(i, j) -= f * a.at(s, j);
      a.at(i, s) = FieldElem::zero(a.q());
    }
    for (int j = s + 1; j < m; ++j) a.at(s, j) = FieldElem::zero(a.q());
    inv[static_cast<size_t>(s)] = bv;
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

// ---------------------------------------------------------------------------
// Column-Hermite normal form over O and the induced coset key

// Canonical representative of gK: upper triangular, diagonal w^{e_i}, entry
// (i,j) for i<j a Laurent polynomial with support in [val, e_i).  Two
// matrices receive equal forms iff they span the same O-column lattice.
struct HermiteForm {
  int m = 0;
  long long q = 0;
  std::vector<int> diag;
  std::vector<Laurent> upper;  // (i,j), i<j, row-major

  Laurent& entry(int i, int j) { return upper[static_cast<size_t>(idx(i, j))]; }
  const Laurent& entry(int i, int j) const { return upper[static_cast<size_t>(idx(i, j))]; }
  int idx(int i, int j) const { return i * m - i * (i + 1) / 2 + (j - i - 1); }

  Mat to_mat() const {
    Mat r(m, q);
    for (int i = 0; i < m; ++i) r.at(i, i) = FieldElem::uniformizer(q, diag[static_cast<size_t>(i)]);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) r.at(i, j) = FieldElem(entry(i, j));
    return r;
  }

  std::string token() const {
    std::ostringstream os;
    os << m << ":";
    for (int i = 0; i < m; ++i) os << (i ? "," : "") << diag[static_cast<size_t>(i)];
    os << ":";
    bool first = true;
    for (const Laurent& l : upper) {
      if (!first) os << ";";
      first = false;
      os << l.str();
    }
    return os.str();
  }

  friend bool operator==(const HermiteForm& x, const HermiteForm& y) {
    return x.m == y.m && x.diag == y.diag && x.upper == y.upper;
  }
  friend bool operator<(const HermiteForm& x, const HermiteForm& y) {
    if (x.diag != y.diag) return x.diag < y.diag;
    return x.upper < y.upper;
  }
};

inline HermiteForm hermite_form(const Mat& g) {
  int m = g.size();
  long long q = g.q();
  Mat a = g;
  // Bottom-up column elimination; the minimal-valuation pivot rule keeps all
  // elimination coefficients in O.
  for (int i = m - 1; i >= 0; --i) {
    int bj = -1, bv = kValInfinity;
    for (int j = 0; j <= i; ++j) {
      int v = a.at(i, j).val();
      if (v < bv) { bv = v; bj = j; }
    }
    if (bj < 0 || bv == kValInfinity) throw domain_error("hermite_form: singular matrix");
    if (bj != i)
      for (int r = 0; r < m; ++r) std::swap(a.at(r, bj), a.at(r, i));
    FieldElem u = FieldElem::uniformizer(q, bv) / a.at(i, i);
    for (int r = 0; r < m; ++r) a.at(r, i) *= u;
    for (int j = 0; j < i; ++j) {
      if (a.at(i, j).is_zero()) continue;
      FieldElem f = a.at(i, j) / a.at(i, i);
      for (int r = 0; r <= i; ++r) a.at(r, j) -= f * a.at(r, i);
    }
  }
  HermiteForm h;
  h.m = m;
  h.q = q;
  h.diag.resize(static_cast<size_t>(m));
  h.upper.assign(static_cast<size_t>(m * (m - 1) / 2), Laurent::zero(q));
  for (int i = 0; i < m; ++i) h.diag[static_cast<size_t>(i)] = a.at(i, i).val();
  // Reduce above-diagonal entries modulo the row modulus w^{e_i}, bottom row
  // of each column first so earlier reductions are not disturbed.
  for (int j = 1; j < m; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      FieldElem r = a.at(i, j);
      Laurent red = r.truncate(h.diag[static_cast<size_t>(i)]);
      FieldElem t = (r - FieldElem(red)) / FieldElem::uniformizer(q, h.diag[static_cast<size_t>(i)]);
      if (!t.is_zero())
        for (int r2 = 0; r2 <= i; ++r2) a.at(r2, j) -= t * a.at(r2, i);
    }
    for (int i = 0; i < j; ++i) {
      const FieldElem& e = a.at(i, j);
      // all entries are exact truncated Laurent polynomials at this point
      h.entry(i, j) = e.truncate(h.diag[static_cast<size_t>(i)]);
    }
  }
  return h;
}

inline std::string coset_key(const Mat& g) { return hermite_form(g).token(); }

// ---------------------------------------------------------------------------
// Token parsing (the coset key is loss-free: it encodes the representative)

namespace detail {

inline Laurent parse_laurent(const std::string& s, long long q) {
  Laurent out(q);
  size_t i = 0;
  auto fail = [&]() { throw domain_error("parse error in Laurent literal: " + s); };
  if (s == "0") return out;
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') { sign = -1; ++i; }
    long long c = 1;
    bool have_num = false;
    if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
      c = 0;
      while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) c = c * 10 + (s[i++] - '0');
      have_num = true;
    }
    int e = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'w')) {
      if (s[i] == '*') ++i;
      if (i >= s.size() || s[i] != 'w') fail();
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int es = 1;
        if (i < s.size() && s[i] == '-') { es = -1; ++i; }
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) fail();
        int ev = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) ev = ev * 10 + (s[i++] - '0');
        e = es * ev;
      }
    } else if (!have_num) {
      fail();
    }
    out += Laurent::monomial(q, e, sign * c);
  }
  return out;
}

inline FieldElem parse_field_elem(const std::string& s, long long q) {
  // Either "poly" or "(poly)/(poly)".
  if (!s.empty() && s[0] == '(') {
    size_t mid = s.find(")/(");
    if (mid == std::string::npos || s.back() != ')')
      throw domain_error("parse error in field element: " + s);
    Laurent n = parse_laurent(s.substr(1, mid - 1), q);
    Laurent d = parse_laurent(s.substr(mid + 3, s.size() - mid - 4), q);
    return FieldElem(n, d);
  }
  return FieldElem(parse_laurent(s, q));
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) { out.push_back(cur); cur.clear(); }
    else cur.push_back(ch);
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline HermiteForm parse_hermite_token(const std::string& tok, long long q) {
  auto parts = detail::split(tok, ':');
  if (parts.size() != 3) throw domain_error("bad coset key token: " + tok);
  HermiteForm h;
  h.m = std::stoi(parts[0]);
  h.q = q;
  for (auto& d : detail::split(parts[1], ',')) h.diag.push_back(std::stoi(d));
  if (static_cast<int>(h.diag.size()) != h.m) throw domain_error("bad coset key token: " + tok);
  if (h.m > 1) {
    auto es = detail::split(parts[2], ';');
    if (static_cast<int>(es.size()) != h.m * (h.m - 1) / 2)
      throw domain_error("bad coset key token: " + tok);
    for (auto& e : es) h.upper.push_back(detail::parse_laurent(e, q));
  }
  return h;
}

}  // namespace heckelab
