#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "critgroup/errors.hpp"
#include "critgroup/graph.hpp"
#include "critgroup/snf.hpp"
#include "test_support.hpp"

using namespace critgroup;
using testing::big;

namespace {

BigInt product(const std::vector<BigInt>& xs) {
  BigInt p = 1;
  for (const BigInt& x : xs) p *= x;
  return p;
}

void check_transforms(const IntMatrix& a) {
  const SnfResult r = snf(a, Transforms::kTrack);
  REQUIRE(r.p.has_value());
  REQUIRE(r.q.has_value());
  CHECK(*r.p * a * *r.q == IntMatrix::diagonal(a.rows(), a.cols(), r.s));
  CHECK(abs(determinant(*r.p)) == 1);
  CHECK(abs(determinant(*r.q)) == 1);
  CHECK(r.s == snf(a).s);
}

}  // namespace

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{2, 0}, {0, 3}}).s == big({1, 6}));
  CHECK(snf(IntMatrix{{7, 59}, {0, 115}}).s == big({1, 805}));
  CHECK(snf(IntMatrix(2, 2)).s == big({0, 0}));
  CHECK(snf(IntMatrix{{0}}).s == big({0}));
  CHECK(snf(IntMatrix(0, 3)).s.empty());
  CHECK(snf(IntMatrix{{4, 6, 10}}).s == big({2}));
  CHECK(snf(IntMatrix{{-3}}).s == big({3}));
  CHECK(snf(IntMatrix{{2, 0, 0}, {0, 0, 0}, {0, 0, 4}}).s == big({2, 4, 0}));
  CHECK(snf(IntMatrix{{6, 0}, {0, 4}}).s == big({2, 12}));
}

TEST_CASE("path(3) Laplacian: golden value from the minors oracle") {
  const IntMatrix l = laplacian(path(3));
  const auto oracle = gcd_minors_invariants(l);
  // Δ_1 = 1, Δ_2 = gcd of 2×2 minors = 1, det = 0.
  CHECK(oracle == big({1, 1, 0}));
  CHECK(snf(l).s == oracle);
}

TEST_CASE("gcd_minors_invariants") {
  CHECK(gcd_minors_invariants(IntMatrix{{2, 0}, {0, 3}}) == big({1, 6}));
  CHECK(gcd_minors_invariants(IntMatrix{{1, 0}, {0, 0}}) == big({1, 0}));
  CHECK(gcd_minors_invariants(laplacian(complete(3))) == big({1, 3, 0}));
  CHECK(gcd_minors_invariants(IntMatrix(2, 3)) == big({0, 0}));
  CHECK_THROWS_AS(gcd_minors_invariants(IntMatrix(7, 7)), UnsupportedSize);
  CHECK_NOTHROW(gcd_minors_invariants(IntMatrix(7, 6)));
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(3)) == 1);
  CHECK(determinant(IntMatrix{{7, 59}, {0, 115}}) == 805);
  CHECK(determinant(delete_row_col(laplacian(complete(4)), 0, 0)) == 16);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{0, 2, 1}, {0, 3, 4}, {5, 6, 7}}) == 25);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("matrices_equivalent") {
  const IntMatrix a{{3, 1}, {4, 1}};
  CHECK(matrices_equivalent(a, a));
  CHECK(matrices_equivalent(IntMatrix{{2, 0}, {0, 3}}, IntMatrix{{1, 0}, {0, 6}}));
  CHECK_FALSE(matrices_equivalent(IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{1, 0}, {0, 4}}));
  CHECK_THROWS_AS(matrices_equivalent(IntMatrix(2, 2), IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("divisibility chain predicate") {
  CHECK(is_divisibility_chain(big({1, 2, 4, 0})));
  CHECK(is_divisibility_chain(big({})));
  CHECK_FALSE(is_divisibility_chain(big({2, 3})));
  CHECK_FALSE(is_divisibility_chain(big({0, 2})));
  CHECK_FALSE(is_divisibility_chain(big({-1, 2})));
}

TEST_CASE("snf agrees with the minors oracle on random matrices") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix a = testing::random_matrix(rng, dim(rng), dim(rng), -9, 9);
    const SnfResult r = snf(a);
    CAPTURE(to_string(a));
    CHECK(r.s == gcd_minors_invariants(a));
    CHECK(is_divisibility_chain(r.s));
  }
}

TEST_CASE("snf properties") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = dim(rng);
    // Low-rank-ish inputs exercise zero handling.
    IntMatrix a = testing::random_matrix(rng, n, n, -4, 4);
    if (trial % 3 == 0) a = a * testing::random_matrix(rng, n, 1 + trial % n) *
                            testing::random_matrix(rng, 1 + trial % n, n);
    const SnfResult r = snf(a);
    CAPTURE(to_string(a));

    // Idempotence.
    CHECK(snf(IntMatrix::diagonal(r.s)).s == r.s);
    // |det| = ∏ s_i.
    CHECK(abs(determinant(a)) == product(r.s));

    // Row permutation and negation leave the invariants unchanged.
    IntMatrix b = a;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) b.swap_rows(i, perm[i]);
    b.negate_row(0);
    CHECK(snf(b).s == r.s);
    CHECK(snf(a.transpose()).s == r.s);
  }
}

TEST_CASE("transform soundness") {
  check_transforms(IntMatrix{{7, 59}, {0, 115}});
  check_transforms(IntMatrix{{6, 0}, {0, 4}});
  check_transforms(IntMatrix(3, 2));
  check_transforms(IntMatrix{{0, 0, 5}, {0, 0, 0}});
  check_transforms(laplacian(join(complete(3), path(4))));

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    check_transforms(testing::random_matrix(rng, dim(rng), dim(rng), -9, 9));
  }
}

TEST_CASE("entry growth stays exact past machine words") {
  IntMatrix a(3, 3);
  a(0, 0) = parse_bigint("340282366920938463463374607431768211457");  // 2^128 + 1
  a(0, 1) = parse_bigint("18446744073709551616");                       // 2^64
  a(1, 1) = parse_bigint("18446744073709551616");
  a(2, 2) = 6;
  a(1, 2) = 4;
  const SnfResult r = snf(a, Transforms::kTrack);
  CHECK(*r.p * a * *r.q == IntMatrix::diagonal(r.s));
  CHECK(product(r.s) == abs(determinant(a)));
  CHECK(is_divisibility_chain(r.s));
}
