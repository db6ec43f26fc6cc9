#pragma once

// Truncated brute-force verification of the stabilizer-determinant formula,
// shared by the unit tests and the acceptance suite.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "heckelab/coset_ops.hpp"
#include "heckelab/orbit.hpp"

namespace heckelab::testsupport {

// Checks stabilizer_det(a, b) against an exact mod-w^3 computation for the
// representative with those parameters.  Returns an empty string on success
// and a description of the first mismatch otherwise.
inline std::string stab_oracle_check(const std::vector<int>& a, const std::vector<int>& b,
                                     long long q, int prec = 3) {
  int n = static_cast<int>(a.size());
  StabDetDescriptor want = stabilizer_det(a, b);
  NormalForm nf;
  nf.c = 0;
  nf.a = a;
  nf.b = b;
  GroupElem g = normal_form_rep(nf, q);
  std::string gkey = gk_key(g);
  std::vector<Laurent> res = sk_lifts(q, prec);

  if (want.all_units) {
    // the closed-form witnesses must stabilize gK for a spanning set of units
    int ai = -1, wi = -1, wj = -1;
    for (int i = 0; i < n; ++i)
      if (a[static_cast<size_t>(i)] <= 0) { ai = i; break; }
    if (ai < 0) {
      for (int i = 0; i < n && wi < 0; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          int cij = std::max(a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)],
                             b[static_cast<size_t>(i)] - b[static_cast<size_t>(j)]);
          if (cij <= 0) { wi = i; wj = j; break; }
        }
    }
    if (ai < 0 && wi < 0) return "no all-units witness index exists";
    int checked = 0;
    for (const Laurent& tval : res) {
      if (tval.is_zero() || tval.val() != 0) continue;
      if (++checked > 8) break;
      Mat h = Mat::identity(n, q);
      FieldElem tf{tval};
      if (ai >= 0) {
        h.at(ai, ai) = tf;
      } else {
        h.at(wi, wi) = tf;
        h.at(wi, wj) = FieldElem::one(q) - tf;
      }
      if (gk_key(embed_delta(h) * g) != gkey) return "witness fails to stabilize";
    }
    return "";
  }

  // congruence branch: enumerate the truncated stabilizer conditions
  std::set<Laurent> achieved;
  std::vector<std::vector<Laurent>> entry_choices;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        entry_choices.push_back(res);
      } else {
        int cij = std::max(a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)],
                           b[static_cast<size_t>(i)] - b[static_cast<size_t>(j)]);
        std::vector<Laurent> ch;
        for (const Laurent& l : sk_lifts(q, std::max(0, prec - cij)))
          ch.push_back(l.shifted(cij).slice(cij, prec));
        entry_choices.push_back(ch);
      }
    }
  std::vector<size_t> idx(entry_choices.size(), 0);
  while (true) {
    Mat h(n, q);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        h.at(i, j) =
            FieldElem(entry_choices[static_cast<size_t>(i * n + j)][idx[static_cast<size_t>(i * n + j)]]);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      FieldElem rowsum = FieldElem::zero(q);
      for (int j = 0; j < n; ++j) rowsum += h.at(i, j);
      FieldElem dev = rowsum - FieldElem::one(q);
      int need = std::min(a[static_cast<size_t>(i)], prec);
      if (!dev.is_zero() && dev.val() < need) ok = false;
    }
    if (ok) {
      Laurent dd = h.det().truncate(prec);
      if (!dd.is_zero() && dd.val() == 0) achieved.insert(dd);
    }
    size_t p = 0;
    while (p < idx.size() && ++idx[p] == entry_choices[p].size()) idx[p++] = 0;
    if (p == idx.size()) break;
  }
  std::set<Laurent> formula;
  int m = std::min(want.m, prec);
  for (const Laurent& tail : sk_lifts(q, prec - m))
    formula.insert(Laurent::one(q) + tail.shifted(m).slice(m, prec));
  if (achieved != formula) return "determinant residue set mismatch";
  return "";
}

// Runs the full |entries| <= 2 grid for one (n, q); returns first failure.
inline std::string stab_oracle_grid(int n, long long q) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(static_cast<size_t>(2 * n));
  std::function<void(size_t)> gen = [&](size_t i) {
    if (i == cur.size()) { tuples.push_back(cur); return; }
    for (int v = -2; v <= 2; ++v) { cur[i] = v; gen(i + 1); }
  };
  gen(0);
  for (auto& t : tuples) {
    std::vector<int> a(t.begin(), t.begin() + n), b(t.begin() + n, t.end());
    std::string err = stab_oracle_check(a, b, q);
    if (!err.empty()) {
      std::string desc = "a=(";
      for (int v : a) desc += std::to_string(v) + ",";
      desc += ") b=(";
      for (int v : b) desc += std::to_string(v) + ",";
      return desc + "): " + err;
    }
  }
  return "";
}

}  // namespace heckelab::testsupport
