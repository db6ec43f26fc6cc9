#pragma once

#include <random>

#include "heckelab/group.hpp"

namespace heckelab::testsupport {

inline Laurent random_poly(std::mt19937& rng, long long q, int lo, int hi) {
  std::uniform_int_distribution<long long> cdist(0, q - 1);
  Laurent l(q);
  for (int e = lo; e <= hi; ++e) l.set_coeff(e, cdist(rng));
  return l;
}

// Random element of K = GL_m(O): elementary integral row operations and unit
// diagonal scalings applied to the identity, so membership holds by
// construction.
inline Mat random_k(std::mt19937& rng, int m, long long q, int ops = 8) {
  Mat k = Mat::identity(m, q);
  std::uniform_int_distribution<int> idx(0, m - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<long long> unit(1, q - 1);
  for (int t = 0; t < ops; ++t) {
    int i = idx(rng), j = idx(rng);
    switch (kind(rng)) {
      case 0: {  // row_i += f * row_j, f integral
        if (i == j) break;
        FieldElem f((random_poly(rng, q, 0, 2)));
        for (int c = 0; c < m; ++c) k.at(i, c) += f * k.at(j, c);
        break;
      }
      case 1: {  // scale row i by a unit polynomial
        Laurent u = random_poly(rng, q, 1, 2);
        u.set_coeff(0, unit(rng));
        FieldElem f(u);
        for (int c = 0; c < m; ++c) k.at(i, c) *= f;
        break;
      }
      default: {  // swap rows
        if (i != j)
          for (int c = 0; c < m; ++c) std::swap(k.at(i, c), k.at(j, c));
        break;
      }
    }
  }
  return k;
}

// Random invertible matrix over F with a few negative-valuation entries.
inline Mat random_gl(std::mt19937& rng, int m, long long q) {
  std::uniform_int_distribution<int> lo(-2, 0);
  for (int tries = 0; tries < 100; ++tries) {
    Mat g(m, q);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        int l = lo(rng);
        g.at(i, j) = FieldElem(random_poly(rng, q, l, l + 3));
      }
    if (g.invertible()) return g;
  }
  return Mat::identity(m, q);
}

inline GroupElem random_group_elem(std::mt19937& rng, int n, long long q) {
  return {random_gl(rng, n + 1, q), random_gl(rng, n, q)};
}

inline GroupElem random_h(std::mt19937& rng, int n, long long q) {
  return embed_delta(random_gl(rng, n, q));
}

inline GroupElem random_k_pair(std::mt19937& rng, int n, long long q) {
  return {random_k(rng, n + 1, q), random_k(rng, n, q)};
}

}  // namespace heckelab::testsupport
