#include "doctest.h"
#include "heckelab/local_orders.hpp"

using namespace heckelab;

TEST_CASE("unit index closed form") {
  CHECK(unit_index({3, +1, 1}) == 2);
  CHECK(unit_index({3, +1, 2}) == 6);
  CHECK(unit_index({3, -1, 1}) == 4);
  CHECK(unit_index({5, -1, 3}) == 150);
  CHECK(unit_index({7, +1, 0}) == 1);
}

TEST_CASE("step index") {
  CHECK(step_index(3, 1, 1) == 3);
  CHECK(step_index(2, 2, 2) == 4);
  CHECK_THROWS_AS(step_index(3, 1, 2), domain_error);
  CHECK_THROWS_AS(step_index(3, 2, 0), domain_error);
  // consistency: unit_index(c+k)/unit_index(c) = q^k
  for (long long q : {2LL, 3LL, 5LL})
    for (int eps : {+1, -1})
      for (int c = 1; c <= 3; ++c)
        for (int k = 1; k <= c; ++k)
          CHECK(unit_index({q, eps, c + k}) == unit_index({q, eps, c}) * step_index(q, c, k));
}

TEST_CASE("galois degree") {
  CHECK(galois_degree(5, +1, 1, 7).value == Rational(4));  // u(r) = 1 for r >= 1
  CHECK(galois_degree(5, +1, 0, 2).value == Rational(2));
  CHECK(galois_degree(3, -1, 0, 1).value == Rational(4));
  GaloisDegree d = galois_degree(5, +1, 0, 3);
  CHECK(!d.integral);  // inconsistent u0 is flagged, not hidden
  CHECK_THROWS_AS(galois_degree(3, 1, 0, 0), domain_error);
}

TEST_CASE("unit index matches brute force for q <= 5, c <= 3, both eps") {
  for (long long q : {2LL, 3LL, 5LL}) {
    for (int eps : {+1, -1}) {
      for (int c = 0; c <= 3; ++c) {
        long long brute = bruteforce_unit_index(q, eps, c);
        if (brute < 0) continue;  // capped
        CHECK(unit_index({q, eps, c}) == brute);
      }
    }
  }
}

TEST_CASE("step index matches the split brute force") {
  CHECK(bruteforce_step_index(2, 2, 2) == 4);
  CHECK(bruteforce_step_index(3, 1, 1) == 3);
  CHECK(bruteforce_step_index(2, 1, 1) == 2);
  CHECK(bruteforce_step_index(3, 2, 1) == 3);
}

TEST_CASE("filtration multiplicativity") {
  for (long long q : {2LL, 3LL, 5LL}) {
    for (int eps : {+1, -1}) {
      for (int c = 1; c <= 3; ++c) {
        long long steps = 1;
        for (int i = 1; i < c; ++i) steps *= q;  // one G_v(eps) layer per step
        CHECK(unit_index({q, eps, c}) == unit_index({q, eps, 1}) * steps);
      }
    }
  }
}
