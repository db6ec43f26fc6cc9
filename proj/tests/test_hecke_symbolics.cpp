#include <random>

#include "doctest.h"
#include "heckelab/hecke_poly.hpp"

using namespace heckelab;

namespace {

TMono mono(int n, std::vector<int> ev, std::vector<int> ew) {
  TMono m(n);
  m.ev = std::move(ev);
  m.ew = std::move(ew);
  return m;
}

SLaurent coeff_of(const TPoly& p, const TMono& m) {
  auto it = p.find(m);
  return it == p.end() ? SLaurent() : it->second;
}

}  // namespace

TEST_CASE("newton-girard base cases") {
  {  // k=1: Y_1
    const YPoly& q = newton_girard(1, 3);
    CHECK(q.size() == 1);
    CHECK(q.at({1, 0, 0}) == 1);
  }
  {  // k=2, n>=2: Y_1^2 - 2 Y_2
    const YPoly& q = newton_girard(2, 2);
    CHECK(q.size() == 2);
    CHECK(q.at({2, 0}) == 1);
    CHECK(q.at({0, 1}) == -2);
  }
  {  // k=3, n>=3: Y_1^3 - 3 Y_1 Y_2 + 3 Y_3
    const YPoly& q = newton_girard(3, 3);
    CHECK(q.size() == 3);
    CHECK(q.at({3, 0, 0}) == 1);
    CHECK(q.at({1, 1, 0}) == -3);
    CHECK(q.at({0, 0, 1}) == 3);
  }
  CHECK_THROWS_AS(newton_girard(0, 2), domain_error);
}

TEST_CASE("newton-girard evaluates to the power sum") {
  const long long p = 10007;
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> dist(0, p - 1);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 2 * n; ++k) {
      const YPoly& qk = newton_girard(k, n);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<long long> y(static_cast<size_t>(n));
        for (auto& v : y) v = dist(rng);
        // elementary symmetric values of y
        std::vector<long long> e(static_cast<size_t>(n + 1), 0);
        e[0] = 1;
        for (int i = 0; i < n; ++i)
          for (int j = std::min(i + 1, n); j >= 1; --j)
            e[static_cast<size_t>(j)] =
                (e[static_cast<size_t>(j)] + e[static_cast<size_t>(j - 1)] * y[static_cast<size_t>(i)]) % p;
        std::vector<long long> evals(e.begin() + 1, e.end());
        long long lhs = ypoly_eval_mod(qk, evals, p);
        long long rhs = 0;
        for (long long v : y) {
          long long t = 1;
          for (int i = 0; i < k; ++i) t = t * v % p;
          rhs = (rhs + t) % p;
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("expand_product at n=1") {
  auto c = expand_product(1);
  REQUIRE(c.size() == 3);
  // z^2 coefficient: 1
  CHECK(c[2].size() == 1);
  CHECK(c[2].at({{0, 0}, {0}}) == 1);
  // z^1 coefficient: -X1 Y1   (the t-power is carried at substitution)
  CHECK(c[1].size() == 1);
  CHECK(c[1].at({{1, 0}, {1}}) == -1);
  // z^0 coefficient: X2 Y1^2
  CHECK(c[0].size() == 1);
  CHECK(c[0].at({{0, 1}, {2}}) == 1);
}

TEST_CASE("expand_product matches the direct product at random points") {
  const long long p = 7;
  std::mt19937 rng(9);
  std::uniform_int_distribution<long long> dist(0, p - 1);
  for (int n = 1; n <= 3; ++n) {
    auto coef = expand_product(n);
    int N = n * (n + 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<long long> x(static_cast<size_t>(n + 1)), y(static_cast<size_t>(n));
      for (auto& v : x) v = dist(rng);
      for (auto& v : y) v = dist(rng);
      // direct product prod (z - x_i y_j) mod p
      std::vector<long long> direct(static_cast<size_t>(N + 1), 0);
      direct[0] = 1;
      int deg = 0;
      for (long long xv : x)
        for (long long yv : y) {
          long long a = ((-xv * yv) % p + p) % p;
          for (int d = deg; d >= 0; --d) {
            direct[static_cast<size_t>(d + 1)] = (direct[static_cast<size_t>(d + 1)] + direct[static_cast<size_t>(d)]) % p;
            direct[static_cast<size_t>(d)] = direct[static_cast<size_t>(d)] * a % p;
          }
          ++deg;
        }
      // elementary symmetric values
      auto elem = [&](const std::vector<long long>& v) {
        std::vector<long long> e(v.size() + 1, 0);
        e[0] = 1;
        for (size_t i = 0; i < v.size(); ++i)
          for (size_t j = std::min(i + 1, v.size()); j >= 1; --j)
            e[j] = (e[j] + e[j - 1] * v[i]) % p;
        return e;
      };
      auto ex = elem(x), ey = elem(y);
      for (int d = 0; d <= N; ++d) {
        long long acc = 0;
        for (auto& [m, c] : coef[static_cast<size_t>(d)]) {
          long long t = ((c % p) + p) % p;
          for (size_t i = 0; i < m.ex.size(); ++i)
            for (int rep = 0; rep < m.ex[i]; ++rep) t = t * ex[i + 1] % p;
          for (size_t j = 0; j < m.ey.size(); ++j)
            for (int rep = 0; rep < m.ey[j]; ++rep) t = t * ey[j + 1] % p;
          acc = (acc + t) % p;
        }
        CHECK(acc == direct[static_cast<size_t>(d)]);
      }
    }
  }
}

TEST_CASE("satake substitution reproduces the worked examples") {
  SUBCASE("n=1: z^2 - T1V T1W z + s^2 T2V T1W^2") {
    HeckePoly h = build_hecke_polynomial(1);
    REQUIRE(h.degree() == 2);
    CHECK(h.coef[2].size() == 1);
    CHECK(coeff_of(h.coef[2], mono(1, {0, 0}, {0})) == SLaurent(1));
    CHECK(h.coef[1].size() == 1);
    CHECK(coeff_of(h.coef[1], mono(1, {1, 0}, {1})) == SLaurent(-1));
    CHECK(h.coef[0].size() == 1);
    CHECK(coeff_of(h.coef[0], mono(1, {0, 1}, {2})) == SLaurent::monomial(2, 1));
  }
  SUBCASE("n=2: pinned z^5, z^4, z^3 and constant coefficients") {
    HeckePoly h = build_hecke_polynomial(2);
    REQUIRE(h.degree() == 6);
    // z^5: -T1V (x) T1W
    CHECK(h.coef[5].size() == 1);
    CHECK(coeff_of(h.coef[5], mono(2, {1, 0, 0}, {1, 0})) == SLaurent(-1));
    // z^4: s^2 (T2V (x) (T1W^2 - 2 s^2 T2W) + T1V^2 (x) T2W)
    CHECK(h.coef[4].size() == 3);
    CHECK(coeff_of(h.coef[4], mono(2, {0, 1, 0}, {2, 0})) == SLaurent::monomial(2, 1));
    CHECK(coeff_of(h.coef[4], mono(2, {0, 1, 0}, {0, 1})) == SLaurent::monomial(4, -2));
    CHECK(coeff_of(h.coef[4], mono(2, {2, 0, 0}, {0, 1})) == SLaurent::monomial(2, 1));
    // z^3: -q^2 T1V T2V (x) T1W T2W - q^3 T3V (x) T1W^3 + 3 q^4 T3V (x) T1W T2W
    CHECK(h.coef[3].size() == 3);
    CHECK(coeff_of(h.coef[3], mono(2, {1, 1, 0}, {1, 1})) == SLaurent::monomial(4, -1));
    CHECK(coeff_of(h.coef[3], mono(2, {0, 0, 1}, {3, 0})) == SLaurent::monomial(6, -1));
    CHECK(coeff_of(h.coef[3], mono(2, {0, 0, 1}, {1, 1})) == SLaurent::monomial(8, 3));
    // constant term: s^18 T3V^2 (x) T2W^3
    CHECK(h.coef[0].size() == 1);
    CHECK(coeff_of(h.coef[0], mono(2, {0, 0, 2}, {0, 3})) == SLaurent::monomial(18, 1));
  }
}

TEST_CASE("monicity, degree and parity invariants") {
  for (int n = 1; n <= 4; ++n) {
    HeckePoly h = build_hecke_polynomial(n);
    CHECK(h.degree() == n * (n + 1));
    const TPoly& lead = h.coef[static_cast<size_t>(h.degree())];
    CHECK(lead.size() == 1);
    CHECK(lead.begin()->first.is_one());
    CHECK(lead.begin()->second == SLaurent(1));
    for (auto& c : h.coef) CHECK(tpoly_even_powers(c));
  }
  CHECK_THROWS_AS(build_hecke_polynomial(5), domain_error);
}

TEST_CASE("specialization at q") {
  HeckePoly h = build_hecke_polynomial(1);
  auto sp = specialize(h, 3);
  CHECK(sp[0].at(mono(1, {0, 1}, {2})) == Rational(3));
  CHECK(sp[1].at(mono(1, {1, 0}, {1})) == Rational(-1));
  CHECK_THROWS_AS(SLaurent::monomial(3, 1).specialize(3), normalization_error);
}

TEST_CASE("fixture rendering is deterministic and descriptive") {
  HeckePoly h = build_hecke_polynomial(1);
  std::string f = to_fixture(h);
  CHECK(f ==
        "z^2 : 1\n"
        "z^1 : -T1V*T1W\n"
        "z^0 : s^2*T2V*T1W^2\n");
  CHECK(to_fixture(build_hecke_polynomial(2)) == to_fixture(build_hecke_polynomial(2)));
}

#ifdef HECKELAB_SOURCE_DIR
#include <fstream>
#include <sstream>

TEST_CASE("checked-in fixtures have not drifted") {
  for (int n = 1; n <= 3; ++n) {
    std::string path =
        std::string(HECKELAB_SOURCE_DIR) + "/fixtures/hecke_poly_n" + std::to_string(n) + ".txt";
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == to_fixture(build_hecke_polynomial(n)));
  }
}
#endif
