#include <doctest.h>

#include "critgroup/int_matrix.hpp"
#include "test_support.hpp"

using namespace critgroup;

TEST_CASE("delete_row_col") {
  CHECK(delete_row_col(IntMatrix::identity(2), 0, 0) == IntMatrix{{1}});
  CHECK(delete_row_col(IntMatrix{{1, -1}, {-1, 1}}, 0, 0) == IntMatrix{{1}});
  CHECK(delete_row_col(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, 1, 2) ==
        IntMatrix{{1, 2}, {7, 8}});
  CHECK_THROWS_AS(delete_row_col(IntMatrix::identity(2), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(delete_row_col(IntMatrix::identity(2), 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(delete_row_col(IntMatrix(0, 0), 0, 0), std::invalid_argument);
}

TEST_CASE("direct sum and diagonal") {
  const IntMatrix s = direct_sum(IntMatrix{{1, 2}}, IntMatrix{{3}, {4}});
  CHECK(s == IntMatrix{{1, 2, 0}, {0, 0, 3}, {0, 0, 4}});
  CHECK(direct_sum(IntMatrix(0, 0), IntMatrix::identity(1)) == IntMatrix::identity(1));

  const auto d = testing::big({2, 3});
  CHECK(IntMatrix::diagonal(d) == IntMatrix{{2, 0}, {0, 3}});
  CHECK(IntMatrix::diagonal(2, 3, d) == IntMatrix{{2, 0, 0}, {0, 3, 0}});
}

TEST_CASE("products and elementary operations") {
  const IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a * a == IntMatrix{{7, 10}, {15, 22}});
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK_THROWS_AS(a * IntMatrix(3, 1), std::invalid_argument);

  IntMatrix b = a;
  b.add_row_multiple(1, 0, BigInt(-3));
  CHECK(b == IntMatrix{{1, 2}, {0, -2}});
  b.add_col_multiple(1, 0, BigInt(-2));
  CHECK(b == IntMatrix{{1, 0}, {0, -2}});
  b.negate_row(1);
  b.swap_cols(0, 1);
  CHECK(b == IntMatrix{{0, 1}, {2, 0}});
}

TEST_CASE("entries are arbitrary precision") {
  IntMatrix a{{1}};
  a(0, 0) = parse_bigint("123456789012345678901234567890");
  const IntMatrix sq = a * a;
  CHECK(sq(0, 0).str() == "15241578753238836750495351562536198787501905199875019052100");
}

TEST_CASE("bigint helpers") {
  CHECK(parse_bigint("-42") == -42);
  CHECK_THROWS_AS(parse_bigint(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_bigint("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bigint("+3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bigint("1e3"), std::invalid_argument);

  BigInt x, y;
  CHECK(ext_gcd(BigInt(240), BigInt(46), x, y) == 2);
  CHECK(240 * x + 46 * y == 2);
  CHECK(ext_gcd(BigInt(-4), BigInt(6), x, y) == 2);
  CHECK(-4 * x + 6 * y == 2);
  CHECK(ext_gcd(BigInt(0), BigInt(-5), x, y) == 5);
  CHECK(-5 * y == 5);

  CHECK(exact_div(BigInt(12), BigInt(-4)) == -3);
  CHECK_THROWS_AS(exact_div(BigInt(7), BigInt(2)), std::logic_error);
}
