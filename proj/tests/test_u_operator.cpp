#include "doctest.h"
#include "heckelab/u_operator.hpp"

using namespace heckelab;

TEST_CASE("frob_power") {
  long long q = 5;
  CHECK(frob_power(2, q, 0) == GroupElem::identity(2, q));
  GroupElem f = frob_power(1, q, 1);
  CHECK(f.g1 == Mat::diag_pi({1, 0}, q));
  CHECK(f.g2 == Mat::diag_pi({1}, q));
  for (int k = 0; k <= 3; ++k) CHECK(frob_power(2, q, k).g2.det().val() == k);
}

TEST_CASE("u_power_reps counts") {
  CHECK(u_power_reps({1, 2, 1}).size() == 2);
  CHECK(u_power_reps({2, 2, 1}).size() == 8);  // q^{k(2n-1)} = 2^3
  CHECK(u_power_reps({2, 3, 0}).size() == 1);  // k = 0: the identity pair
  CHECK(u_power_reps({2, 3, 0})[0] == GroupElem::identity(2, 3));

  for (long long q : {2LL, 3LL})
    for (int n = 1; n <= 2; ++n)
      for (int k = 1; k <= (n == 1 ? 3 : 2); ++k) {
        long long expect = 1;
        for (int i = 0; i < k * (2 * n - 1); ++i) expect *= q;
        auto reps = u_power_reps({n, q, k});
        CHECK(static_cast<long long>(reps.size()) == expect);
        for (auto& r : reps) {
          CHECK(is_member(r.g1, SubgroupSpec::Iplus()));
          CHECK(is_member(r.g2, SubgroupSpec::Iplus()));
        }
      }

  CHECK_THROWS_AS(u_power_reps({2, 5, 4, 1000}), resource_error);
}

TEST_CASE("u_power_apply produces distinct unit-coefficient cosets") {
  {
    GKSum s = u_power_apply({1, 2, 1});
    CHECK(s.size() == 2);
    for (auto& [k, c] : s.terms()) CHECK(c == Rational(1));
  }
  {
    GKSum s = u_power_apply({1, 3, 2});
    CHECK(s.size() == 9);
    for (auto& [k, c] : s.terms()) CHECK(c == Rational(1));
  }
  CHECK_THROWS_AS(u_power_apply({1, 2, 0}), domain_error);
}

TEST_CASE("iteration consistency: U_mu^k [1] = (U_mu)^k [1]") {
  auto run = [&](int n, long long q, int kmax) {
    UConfig cfg{n, q, 1};
    GKSum x = GKSum::single(gk_key(GroupElem::identity(n, q)));
    for (int k = 1; k <= kmax; ++k) {
      x = u_step_apply(cfg, x);
      UConfig direct{n, q, k};
      CHECK(x == u_power_apply(direct));
    }
  };
  run(1, 2, 3);
  run(1, 3, 3);
  run(2, 2, 2);
  run(2, 3, 2);
}
