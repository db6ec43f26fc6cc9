#include <algorithm>

#include "doctest.h"
#include "heckelab/satake_oracle.hpp"

using namespace heckelab;

TEST_CASE("modulus function instances") {
  CHECK(modulus_delta({0, 0}, 2) == SLaurent(1));
  CHECK(modulus_delta({1, 0}, 2) == SLaurent::monomial(-2, 1));
  CHECK(modulus_delta_sqrt({1, 0}, 2) == SLaurent::monomial(-1, 1));
  CHECK(modulus_delta({1, 1, 1}, 3) == SLaurent(1));  // central direction
}

TEST_CASE("brute-force transform at single cocharacters") {
  SUBCASE("GL_2, lambda_1, nu = (1,0), q = 3: coefficient s") {
    SLaurent c = satake_transform_bruteforce({2, 1}, {1, 0}, 3);
    CHECK(c == SLaurent::monomial(1, 1));
  }
  SUBCASE("off the Weyl orbit the transform vanishes") {
    CHECK(satake_transform_bruteforce({2, 1}, {2, -1}, 3).is_zero());
    CHECK(satake_transform_bruteforce({3, 1}, {1, 1, -1}, 2).is_zero());
  }
  SUBCASE("central cocharacter: c_lambda = 1, all other nu -> 0") {
    CHECK(satake_transform_bruteforce({2, 2}, {1, 1}, 3) == SLaurent(1));
    CHECK(satake_transform_bruteforce({2, 2}, {2, 0}, 3).is_zero());
  }
}

TEST_CASE("Weyl invariance of the transform") {
  for (long long q : {2LL, 3LL}) {
    for (int m = 2; m <= 3; ++m) {
      for (int k = 1; k <= m; ++k) {
        std::vector<int> nu(static_cast<size_t>(m), 0);
        for (int i = 0; i < k; ++i) nu[static_cast<size_t>(i)] = 1;
        std::sort(nu.begin(), nu.end());
        SLaurent ref;
        bool have_ref = false;
        do {
          SLaurent c = satake_transform_bruteforce({m, k}, nu, q);
          if (!have_ref) { ref = c; have_ref = true; }
          CHECK(c == ref);
        } while (std::next_permutation(nu.begin(), nu.end()));
      }
    }
  }
}

TEST_CASE("dictionary verification passes for n <= 2, q in {2,3}") {
  CHECK(verify_dictionary(1, 2).pass);
  CHECK(verify_dictionary(1, 3).pass);
  DictCheck d2 = verify_dictionary(2, 2);
  INFO(d2.detail);
  CHECK(d2.pass);
  DictCheck d3 = verify_dictionary(2, 3);
  INFO(d3.detail);
  CHECK(d3.pass);
}

TEST_CASE("resource cap raises") {
  CHECK_THROWS_AS(satake_transform_bruteforce({3, 1}, {1, 0, 0}, 5, 10),
                  resource_error);
}
