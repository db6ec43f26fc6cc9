#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "heckelab/coset_ops.hpp"
#include "heckelab/slaurent.hpp"

namespace heckelab {

// delta_B(diag(w^{a_j})) = q^{-sum_j (m+1-2j) a_j} for GL_m with the
// upper-triangular Borel, as an s-Laurent monomial (s^2 = q).
inline SLaurent modulus_delta(const std::vector<int>& a, int m) {
  int e = 0;
  for (int j = 1; j <= m; ++j) e += (m + 1 - 2 * j) * a[static_cast<size_t>(j - 1)];
  return SLaurent::monomial(-2 * e, 1);
}

inline SLaurent modulus_delta_sqrt(const std::vector<int>& a, int m) {
  int e = 0;
  for (int j = 1; j <= m; ++j) e += (m + 1 - 2 * j) * a[static_cast<size_t>(j - 1)];
  return SLaurent::monomial(-e, 1);
}

// Iwasawa cell count #{ u in U(F)/U(O) : cartan(nu(w) u) = lambda }.
// Strictly-upper entries are enumerated as w-polynomials supported on [-B, 0);
// distinct tuples represent distinct classes of U(F)/U(O).
inline long long satake_cell_count(const MinusculeCochar& lam, const std::vector<int>& nu,
                                   long long q, long long cap = 10000000) {
  int m = lam.factor_size;
  if (static_cast<int>(nu.size()) != m) throw domain_error("satake: nu has wrong length");
  int max_abs_nu = 0;
  for (int v : nu) max_abs_nu = std::max(max_abs_nu, v < 0 ? -v : v);
  int B = 1 + max_abs_nu;  // spread of a minuscule cocharacter is <= 1
  int slots = m * (m - 1) / 2;
  long long per = 1;
  for (int i = 0; i < B; ++i) per *= q;
  long long total = 1;
  for (int s = 0; s < slots; ++s) {
    if (total > cap / per) throw resource_error("satake_transform_bruteforce: enumeration too large");
    total *= per;
  }
  std::vector<int> lambda(static_cast<size_t>(m), 0);
  for (int i = 0; i < lam.k; ++i) lambda[static_cast<size_t>(i)] = 1;

  Mat base = Mat::diag_pi(nu, q);
  long long count = 0;
  for (long long it = 0; it < total; ++it) {
    Mat g = base;
    long long x = it;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        long long v = x % per;
        x /= per;
        Laurent entry(q);
        long long vv = v;
        for (int d = 0; d < B; ++d) {
          entry.set_coeff(-B + d, vv % q);
          vv /= q;
        }
        if (!entry.is_zero()) {
          // row i of nu(w) u picks up w^{nu_i} * entry
          g.at(i, j) = FieldElem(entry.shifted(nu[static_cast<size_t>(i)]));
        }
      }
    if (cartan_invariants(g) == lambda) ++count;
  }
  return count;
}

// Base-q digits re-expressed through s^2 = q, so integer counts can be
// compared formally in Z[s, s^-1].
inline SLaurent count_as_q_power(long long count, long long q) {
  SLaurent out;
  for (int i = 0; count > 0; ++i, count /= q) out += SLaurent::monomial(2 * i, count % q);
  return out;
}

// Brute-force Satake coefficient of 1_{K lambda_k(w) K} at the cocharacter nu:
//   c_nu = delta^{1/2}(nu(w)) * (cell count).
inline SLaurent satake_transform_bruteforce(const MinusculeCochar& lam, const std::vector<int>& nu,
                                            long long q, long long cap = 10000000) {
  long long count = satake_cell_count(lam, nu, q, cap);
  return modulus_delta_sqrt(nu, lam.factor_size) * count_as_q_power(count, q);
}

// Dictionary verification report for one (n, q).
struct DictCheck {
  bool pass = true;
  std::string detail;  // counterexample description on failure
  long long transforms = 0;
};

// Checks S(T_{k,V}) = s^{k(n+1-k)} m_{lambda_k} and S(T_{k,W}) = s^{k(n-k)}
// m_{lambda_k} coefficient by coefficient on a window of cocharacters around
// the orbit, including the off-orbit vanishing and total-mass consistency
// with |K lambda K / K|.
inline DictCheck verify_dictionary(int n, long long q, long long cap = 10000000) {
  DictCheck out;
  for (int factor = 0; factor < 2 && out.pass; ++factor) {
    int m = factor == 0 ? n + 1 : n;
    for (int k = 1; k <= m && out.pass; ++k) {
      // scan window: all nu with sum = k, entries in [-1, 2]
      std::vector<std::vector<int>> nus;
      std::vector<int> cur(static_cast<size_t>(m));
      std::function<void(int, int)> gen = [&](int idx, int sum) {
        if (idx == m) {
          if (sum == k) nus.push_back(cur);
          return;
        }
        for (int v = -1; v <= 2; ++v) {
          cur[static_cast<size_t>(idx)] = v;
          gen(idx + 1, sum + v);
        }
      };
      gen(0, 0);
      long long mass = 0;
      for (auto& nu : nus) {
        long long cells = satake_cell_count({m, k}, nu, q, cap);
        mass += cells;
        SLaurent c = modulus_delta_sqrt(nu, m) * count_as_q_power(cells, q);
        ++out.transforms;
        bool on_orbit = true;
        for (int v : nu)
          if (v != 0 && v != 1) on_orbit = false;
        SLaurent expect = on_orbit ? SLaurent::monomial(k * (m - k), 1) : SLaurent();
        if (c != expect) {
          out.pass = false;
          std::ostringstream os;
          os << "m=" << m << " k=" << k << " nu=(";
          for (size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
          os << "): got " << c.str() << ", expected " << expect.str();
          out.detail = os.str();
          break;
        }
      }
      if (out.pass && mass != gaussian_binomial(m, k, q)) {
        out.pass = false;
        std::ostringstream os;
        os << "m=" << m << " k=" << k << ": total mass " << mass << " != [m k]_q = "
           << gaussian_binomial(m, k, q);
        out.detail = os.str();
      }
    }
  }
  return out;
}

}  // namespace heckelab
