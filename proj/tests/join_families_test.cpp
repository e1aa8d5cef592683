#include <doctest.h>

#include <cmath>

#include "critgroup/errors.hpp"
#include "critgroup/join_families.hpp"
#include "test_support.hpp"

using namespace critgroup;
using testing::big;

TEST_CASE("seq_ab reproduces the worked examples") {
  const AbSequence s34 = seq_ab(3, 4);
  CHECK(s34.a_at(4) == 115);
  CHECK(s34.b_at(4) == 59);
  const AbSequence s44 = seq_ab(4, 4);
  CHECK(s44.a_at(4) == 204);
  CHECK(s44.b_at(4) == 83);
  const AbSequence s45 = seq_ab(4, 5);
  CHECK(s45.a_at(5) == 1189);
  CHECK(s45.b_at(5) == 730);

  CHECK(s45.a == big({1, 6, 35, 204, 1189}));
  CHECK(s45.b == big({0, 3, 21, 125, 730}));
  CHECK_THROWS_AS(seq_ab(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(seq_ab(3, 1), std::invalid_argument);
}

TEST_CASE("a sequence invariants") {
  for (std::size_t m = 1; m <= 10; ++m) {
    const AbSequence s = seq_ab(m, 20);
    CHECK(s.a_at(1) == 1);
    CHECK(s.a_at(2) == m + 2);
    CHECK(s.b_at(1) == 0);
    CHECK(s.b_at(2) == 18);
    for (std::size_t l = 2; l <= 20; ++l) {
      CHECK(s.a_at(l) > s.a_at(l - 1));
      CHECK(a_term(m, l) == s.a_at(l));
    }
  }
  CHECK(a_term(5, 1) == 1);
}

TEST_CASE("km_pn closed forms") {
  CHECK(km_pn_group(3, 4).torsion == big({7, 805}));
  CHECK(km_pn_group(4, 4).torsion == big({8, 8, 1632}));
  CHECK(km_pn_group(4, 5).torsion == big({9, 9, 10701}));

  CHECK(km_pn_tree_count(3, 4) == 5635);
  CHECK(km_pn_tree_count(4, 4) == 104448);
  CHECK(km_pn_tree_count(4, 4) == BigInt(8) * 8 * 1632);
  CHECK(km_pn_tree_count(2, 1) == 3);

  CHECK_THROWS_AS(km_pn_group(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(km_pn_group(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(km_pn_tree_count(2, 0), std::invalid_argument);
}

TEST_CASE("p/q and c/d recurrences") {
  const PqSequence pq = seq_pq(5, 5);
  CHECK(pq.p == big({8, 56, 385}));
  CHECK(pq.q == big({0, -7, -55}));
  const CdSequence cd = seq_cd(5, 5);
  CHECK(cd.c == big({8, 56, 385}));
  CHECK(cd.d == big({0, -7, -55}));
  CHECK(BigInt(6) * 385 - 56 + 1 == 2255);

  CHECK(seq_pq(4, 9).p.size() == 2);
  CHECK(seq_cd(9, 7).c.size() == 5);
  CHECK_THROWS_AS(seq_pq(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(seq_cd(5, 3), std::invalid_argument);
}

TEST_CASE("pm_pn_params worked examples") {
  const PmPnParams a = pm_pn_params(4, 5);
  CHECK(a.p_prime == 329);
  CHECK(a.alpha == 65);
  CHECK(a.beta == 296);
  const PmPnParams b = pm_pn_params(4, 6);
  CHECK(b.p_prime == 496);
  CHECK(b.alpha == 82);
  CHECK(b.beta == 1731);
  const PmPnParams c = pm_pn_params(5, 5);
  CHECK(c.p_prime == 2255);
  CHECK(c.alpha == 450);
  CHECK(c.beta == 450);

  CHECK_THROWS_AS(pm_pn_params(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(pm_pn_params(5, 3), std::invalid_argument);
}

TEST_CASE("pm_pn closed forms") {
  CHECK(pm_pn_group(4, 5).torsion == big({391181}));
  CHECK(pm_pn_group(4, 6).torsion == big({3437280}));
  CHECK(pm_pn_group(5, 5).torsion == big({451, 11275}));
  CHECK(pm_pn_tree_count(4, 5) == 391181);
  CHECK(pm_pn_tree_count(5, 5) == BigInt(451) * 11275);
}

TEST_CASE("pm_pn identities over a grid") {
  for (std::size_t m = 4; m <= 14; ++m) {
    for (std::size_t n = 4; n <= 14; ++n) {
      const PmPnParams prm = pm_pn_params(m, n);
      CHECK(n * prm.alpha + m == prm.p_prime);
      // p' and mβ+n are the a-sequences with the roles of m and n swapped.
      CHECK(prm.p_prime == a_term(n, m));
      CHECK(m * prm.beta + n == a_term(m, n));
      CHECK(pm_pn_group(m, n) == pm_pn_group(n, m));
      CHECK(pm_pn_group(m, n).order() == pm_pn_tree_count(m, n));
    }
  }
}

TEST_CASE("radical closed forms track the recurrences") {
  for (std::size_t m = 1; m <= 12; ++m) {
    for (std::size_t l = 1; l <= 40; ++l) {
      const double exact = a_term(m, l).convert_to<double>();
      CHECK(std::abs(radical_a(m, l) - exact) / exact < 1e-9);
    }
  }
  for (std::size_t m = 1; m <= 8; ++m) {
    const std::size_t n = 12;
    const AbSequence s = seq_ab(m, n);
    for (std::size_t l = 2; l <= n; ++l) {
      const double exact = s.b_at(l).convert_to<double>();
      CAPTURE(m);
      CAPTURE(l);
      CHECK(std::abs(radical_b(m, n, l) - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
    }
  }
  const PqSequence pq = seq_pq(12, 7);
  for (std::size_t k = 0; k < pq.p.size(); ++k) {
    const double exact = pq.p[k].convert_to<double>();
    CHECK(std::abs(radical_p(7, k) - exact) / exact < 1e-9);
  }
  const CdSequence cd = seq_cd(6, 12);
  for (std::size_t k = 0; k < cd.c.size(); ++k) {
    const double exact = cd.c[k].convert_to<double>();
    CHECK(std::abs(radical_c(6, k) - exact) / exact < 1e-9);
  }
}

TEST_CASE("eigen_product_check") {
  const EigenProductCheck km = eigen_product_check(3, 4, Family::kKmPn);
  CHECK(km.exact_value == 115.0);
  CHECK(km.worst() < 1e-9);

  const EigenProductCheck pm = eigen_product_check(4, 5, Family::kPmPn);
  CHECK(pm.exact_value == 391181.0);
  CHECK(pm.worst() < 1e-9);

  const EigenProductCheck unit = eigen_product_check(1, 1, Family::kKmPn);
  CHECK(unit.trig_product == 1.0);
  CHECK(unit.exact_value == 1.0);
  CHECK(unit.worst() < 1e-12);

  CHECK(eigen_product_check(2, 3, Family::kPmPn).worst() < 1e-9);
  CHECK(eigen_product_check(64, 64, Family::kKmPn).worst() < 1e-9);
  CHECK_THROWS_AS(eigen_product_check(65, 4, Family::kKmPn), UnsupportedSize);
  CHECK_THROWS_AS(eigen_product_check(0, 4, Family::kKmPn), std::invalid_argument);
}

TEST_CASE("closed forms agree with the generic pipeline on a small grid") {
  for (std::size_t m = 2; m <= 4; ++m)
    for (std::size_t n = 2; n <= 5; ++n)
      CHECK(km_pn_group(m, n) == critical_group(join(complete(m), path(n))));
  CHECK(pm_pn_group(4, 4) == critical_group(join(path(4), path(4))));
  CHECK(pm_pn_group(5, 4) == critical_group(join(path(5), path(4))));
}
