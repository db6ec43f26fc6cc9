#pragma once

#include <string>

#include "heckelab/matrix.hpp"

namespace heckelab {

// Element of G = GL_{n+1}(F) x GL_n(F).
struct GroupElem {
  Mat g1, g2;

  GroupElem() = default;
  GroupElem(Mat a, Mat b) : g1(std::move(a)), g2(std::move(b)) {}

  int n() const { return g2.size(); }
  long long q() const { return g2.q(); }

  friend GroupElem operator*(const GroupElem& x, const GroupElem& y) {
    return {x.g1 * y.g1, x.g2 * y.g2};
  }
  GroupElem inverse() const { return {g1.inverse(), g2.inverse()}; }
  friend bool operator==(const GroupElem& x, const GroupElem& y) {
    return x.g1 == y.g1 && x.g2 == y.g2;
  }

  static GroupElem identity(int n, long long q) {
    return {Mat::identity(n + 1, q), Mat::identity(n, q)};
  }
};

// Diagonal embedding H = GL_n -> G, h |-> (iota(h), h).
inline GroupElem embed_delta(const Mat& h) { return {embed_iota(h), h}; }

// Frob^k = Delta(diag(w^k, 1, ..., 1)).
inline GroupElem frob_power(int n, long long q, int k) {
  std::vector<int> a(static_cast<size_t>(n), 0);
  a[0] = k;
  return embed_delta(Mat::diag_pi(a, q));
}

// ---------------------------------------------------------------------------
// Subgroup membership

enum class SubgroupTag { K, Iwahori, IwahoriPlus, H, Hder, Hc, DeltaK2 };

struct SubgroupSpec {
  SubgroupTag tag;
  int c = 0;  // conductor parameter for Hc

  static SubgroupSpec K() { return {SubgroupTag::K}; }
  static SubgroupSpec I() { return {SubgroupTag::Iwahori}; }
  static SubgroupSpec Iplus() { return {SubgroupTag::IwahoriPlus}; }
  static SubgroupSpec H() { return {SubgroupTag::H}; }
  static SubgroupSpec Hder() { return {SubgroupTag::Hder}; }
  static SubgroupSpec Hc(int c) { return {SubgroupTag::Hc, c}; }
  static SubgroupSpec DeltaK2() { return {SubgroupTag::DeltaK2}; }
};

inline bool is_in_K(const Mat& g) {
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (!g.at(i, j).is_integral()) return false;
  return g.det().is_unit();
}

// Iwahori: integral, upper triangular mod w, determinant a unit.
inline bool is_in_iwahori(const Mat& g) {
  if (!is_in_K(g)) return false;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < i; ++j)
      if (!g.at(i, j).is_zero() && g.at(i, j).val() < 1) return false;
  return true;
}

// I^+ = U cap I: integral unipotent upper triangular.
inline bool is_in_iwahori_plus(const Mat& g) {
  for (int i = 0; i < g.size(); ++i) {
    if (!g.at(i, i).is_one()) return false;
    for (int j = 0; j < i; ++j)
      if (!g.at(i, j).is_zero()) return false;
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.at(i, j).is_integral()) return false;
  }
  return true;
}

// det in 1 + w^c O (c = 0 means O^*).
inline bool det_in_congruence(const Mat& h, int c) {
  FieldElem d = h.det();
  if (!d.is_unit()) return false;
  if (c == 0) return true;
  return (d - FieldElem::one(h.q())).val() >= c;
}

inline bool is_member(const Mat& g, const SubgroupSpec& s) {
  switch (s.tag) {
    case SubgroupTag::K: return is_in_K(g);
    case SubgroupTag::Iwahori: return is_in_iwahori(g);
    case SubgroupTag::IwahoriPlus: return is_in_iwahori_plus(g);
    default: throw domain_error("is_member: tag requires a GroupElem");
  }
}

inline bool is_member(const GroupElem& g, const SubgroupSpec& s) {
  switch (s.tag) {
    case SubgroupTag::K:
      return is_in_K(g.g1) && is_in_K(g.g2);
    case SubgroupTag::Iwahori:
      return is_in_iwahori(g.g1) && is_in_iwahori(g.g2);
    case SubgroupTag::IwahoriPlus:
      return is_in_iwahori_plus(g.g1) && is_in_iwahori_plus(g.g2);
    case SubgroupTag::H:
      return g.g1 == embed_iota(g.g2) && g.g2.invertible();
    case SubgroupTag::Hder:
      return g.g1 == embed_iota(g.g2) && g.g2.det().is_one();
    case SubgroupTag::Hc:
      return g.g1 == embed_iota(g.g2) && det_in_congruence(g.g2, s.c);
    case SubgroupTag::DeltaK2:
      return g.g1 == embed_iota(g.g2) && is_in_K(g.g2);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Canonical key of a coset gK, K = GL_{n+1}(O) x GL_n(O)

// Loss-free: the token encodes the Hermite pair, so the canonical
// representative can be reconstructed from the key alone.
inline std::string gk_key(const GroupElem& g) {
  return hermite_form(g.g1).token() + "||" + hermite_form(g.g2).token();
}

inline GroupElem gk_representative(const std::string& key, long long q) {
  size_t mid = key.find("||");
  if (mid == std::string::npos) throw domain_error("bad G/K key: " + key);
  return {parse_hermite_token(key.substr(0, mid), q).to_mat(),
          parse_hermite_token(key.substr(mid + 2), q).to_mat()};
}

}  // namespace heckelab
