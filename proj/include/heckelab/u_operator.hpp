#pragma once

#include <string>
#include <vector>

#include "heckelab/coset_ops.hpp"
#include "heckelab/group.hpp"

namespace heckelab {

struct UConfig {
  int n = 1;
  long long q = 2;
  int k = 1;
  long long cap = 10000000;  // group-operation cap
};

inline long long u_rep_count(const UConfig& cfg) {
  long long total = 1;
  for (int i = 0; i < cfg.k * (2 * cfg.n - 1); ++i) {
    if (total > cfg.cap / cfg.q) return -1;
    total *= cfg.q;
  }
  return total;
}

// (u_{k,a}, v_{k,b}): first-row unipotents with entries from the lift set S_k,
// a complete set of representatives for I^+ / mu(w^k) I^+ mu(w^-k).
inline std::vector<GroupElem> u_power_reps(const UConfig& cfg) {
  long long total = u_rep_count(cfg);
  if (total < 0) throw resource_error("u_power_reps: q^{k(2n-1)} exceeds the cap");
  const int n = cfg.n;
  const long long q = cfg.q;
  std::vector<Laurent> lifts = sk_lifts(q, cfg.k);
  long long L = static_cast<long long>(lifts.size());
  std::vector<GroupElem> out;
  out.reserve(static_cast<size_t>(total));
  for (long long it = 0; it < total; ++it) {
    Mat u = Mat::identity(n + 1, q);
    Mat v = Mat::identity(n, q);
    long long x = it;
    for (int j = 1; j <= n; ++j) {
      u.at(0, j) = FieldElem(lifts[static_cast<size_t>(x % L)]);
      x /= L;
    }
    for (int j = 1; j <= n - 1; ++j) {
      v.at(0, j) = FieldElem(lifts[static_cast<size_t>(x % L)]);
      x /= L;
    }
    out.push_back({std::move(u), std::move(v)});
  }
  return out;
}

// U_mu^k([1]) = sum over the representatives of (u, v) Frob^k K; the cosets
// are pairwise distinct, and a collision aborts as an internal error.
inline GKSum u_power_apply(const UConfig& cfg) {
  if (cfg.k < 1) throw domain_error("u_power_apply: k >= 1 required");
  GroupElem frobk = frob_power(cfg.n, cfg.q, cfg.k);
  GKSum out;
  size_t expected = 0;
  for (const GroupElem& uv : u_power_reps(cfg)) {
    out.add(gk_key(uv * frobk), Rational(1));
    ++expected;
    if (out.size() != expected)
      throw internal_error("u_power_apply: duplicate coset among representatives");
  }
  return out;
}

// Single U_mu step on a general sum, as the left-translate family
// sum_{(u,v)} (u,v) Frob . x.  Valid on the B-stable classes arising from
// [1]; the iteration-consistency test aborts on any discrepancy rather than
// absorbing one.
inline GKSum u_step_apply(const UConfig& cfg, const GKSum& x) {
  UConfig one = cfg;
  one.k = 1;
  GroupElem frob = frob_power(cfg.n, cfg.q, 1);
  std::vector<GroupElem> reps = u_power_reps(one);
  GKSum out;
  for (const GroupElem& uv : reps) {
    GroupElem t = uv * frob;
    out += left_translate_gk(t, x, cfg.q);
  }
  return out;
}

}  // namespace heckelab
