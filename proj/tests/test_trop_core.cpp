#include <limits>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tropattack/matrix.hpp"

using namespace tropattack;

namespace {
const TropScalar NI = TropScalar::neg_inf();
}

TEST_CASE("trop_add is max with -inf neutral") {
  CHECK(trop_add(3, 5) == TropScalar(5));
  CHECK(trop_add(NI, 7) == TropScalar(7));
  CHECK(trop_add(4, 4) == TropScalar(4));
  CHECK(trop_add(NI, NI).is_neg_inf());
}

TEST_CASE("trop_mul is addition with -inf absorbing") {
  CHECK(trop_mul(3, 5) == TropScalar(8));
  CHECK(trop_mul(NI, 7).is_neg_inf());
  CHECK(trop_mul(0, 9) == TropScalar(9));
}

TEST_CASE("trop_mul detects overflow") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(trop_mul(big, 1), OverflowError);
  CHECK_THROWS_AS(trop_mul(std::numeric_limits<std::int64_t>::min(), -1), OverflowError);
  CHECK(trop_mul(big, NI).is_neg_inf());
}

TEST_CASE("mat_mul examples") {
  const TropMatrix a{{1, 2}, {3, 4}};
  const TropMatrix b{{5, 6}, {7, 8}};
  CHECK(mat_mul(a, b) == TropMatrix{{9, 10}, {11, 12}});
  CHECK(mat_mul(a, trop_identity(2)) == a);
  CHECK(mat_mul(trop_identity(2), a) == a);

  const TropMatrix c{{NI, NI}, {1, 2}};
  const TropMatrix out = mat_mul(c, b);
  CHECK(out(0, 0).is_neg_inf());
  CHECK(out(0, 1).is_neg_inf());
}

TEST_CASE("mat_mul rejects shape mismatch and handles rectangles") {
  const TropMatrix a(2, 3);
  const TropMatrix b(2, 2);
  CHECK_THROWS_AS(mat_mul(a, b), ShapeError);
  const TropMatrix r{{1, 2, 3}};
  const TropMatrix col{{1}, {0}, {-1}};
  CHECK(mat_mul(r, col) == TropMatrix{{2}});
}

TEST_CASE("mat_pow examples") {
  const TropMatrix a{{1, 2}, {3, 4}};
  CHECK(mat_pow(a, 0) == trop_identity(2));
  CHECK(mat_pow(a, 1) == a);
  CHECK(mat_pow(a, 2) == TropMatrix{{5, 6}, {7, 8}});
  CHECK_THROWS_AS(mat_pow(TropMatrix(2, 3), 2), ShapeError);
}

TEST_CASE("mat_pow signals overflow") {
  const TropMatrix a{{std::int64_t{1} << 40}};
  CHECK_THROWS_AS(mat_pow(a, std::uint64_t{1} << 30), OverflowError);
}

TEST_CASE("mat_pow is additive in the exponent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -20, 20, 0.2);
    const unsigned s = rng() % 11;
    const unsigned t = rng() % 11;
    CHECK(mat_pow(a, s + t) == mat_mul(mat_pow(a, s), mat_pow(a, t)));
  }
}

TEST_CASE("mat_pow by squaring equals iterated product") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -50, 50, 0.3);
    for (unsigned t = 0; t <= 16; ++t) CHECK(mat_pow(a, t) == oracle::naive_pow(a, t));
  }
}

TEST_CASE("semiring laws on scalars") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    const TropScalar a = oracle::random_scalar(rng, -1000, 1000, 0.1);
    const TropScalar b = oracle::random_scalar(rng, -1000, 1000, 0.1);
    const TropScalar c = oracle::random_scalar(rng, -1000, 1000, 0.1);
    REQUIRE(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    REQUIRE(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    REQUIRE(trop_add(a, b) == trop_add(b, a));
    REQUIRE(trop_add(a, a) == a);
    REQUIRE(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
    REQUIRE(trop_mul(trop_add(a, b), c) == trop_add(trop_mul(a, c), trop_mul(b, c)));
    REQUIRE(trop_mul(a, 0) == a);
    REQUIRE(trop_add(a, NI) == a);
  }
}

TEST_CASE("semiring laws on square matrices") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -30, 30, 0.2);
    const TropMatrix b = oracle::random_matrix(rng, n, n, -30, 30, 0.2);
    const TropMatrix c = oracle::random_matrix(rng, n, n, -30, 30, 0.2);
    REQUIRE(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    REQUIRE(mat_add(mat_add(a, b), c) == mat_add(a, mat_add(b, c)));
    REQUIRE(mat_add(a, b) == mat_add(b, a));
    REQUIRE(mat_add(a, a) == a);
    REQUIRE(mat_mul(a, mat_add(b, c)) == mat_add(mat_mul(a, b), mat_mul(a, c)));
    REQUIRE(mat_mul(mat_add(a, b), c) == mat_add(mat_mul(a, c), mat_mul(b, c)));
  }
}

TEST_CASE("an all -inf column survives as the right factor of a product") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    TropMatrix a = oracle::random_matrix(rng, n, n, -10, 10, 0.2);
    const std::size_t col = rng() % n;
    for (std::size_t i = 0; i < n; ++i) a(i, col) = NI;
    const TropMatrix x = oracle::random_matrix(rng, n, n, -10, 10, 0.2);
    const TropMatrix out = mat_mul(x, a);
    for (std::size_t i = 0; i < n; ++i) CHECK(out(i, col).is_neg_inf());
  }
}

TEST_CASE("rational arithmetic stays reduced and exact") {
  const Rational half(1, 2);
  CHECK(half + half == Rational(1));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(7, 3) > Rational(2));
  CHECK_THROWS_AS(Rational(1, 0), ValidationError);
  CHECK_THROWS_AS(Rational(3, 2).to_integer(), ValidationError);
}
