#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tropattack/spectral.hpp"

using namespace tropattack;

namespace {

const TropScalar NI = TropScalar::neg_inf();
const RatScalar RNI = RatScalar::neg_inf();

RatScalar q(std::int64_t v) { return RatScalar(Rational(v)); }

Rational cycle_mean(const TropMatrix& a, const CriticalCycle& z) {
  std::int64_t weight = 0;
  for (auto v : z.vertices) weight += a(v, z.next(v)).value();
  return Rational(weight, static_cast<std::int64_t>(z.length()));
}

TropMatrix random_strongly_connected(std::mt19937_64& rng, std::size_t n, std::int64_t lo,
                                     std::int64_t hi, double density) {
  while (true) {
    TropMatrix a = oracle::random_matrix(rng, n, n, lo, hi, density);
    if (oracle::strongly_connected(a)) return a;
  }
}

}  // namespace

TEST_CASE("max_cycle_mean examples") {
  CHECK(max_cycle_mean(TropMatrix{{0}}) == q(0));
  CHECK(max_cycle_mean(TropMatrix{{NI, 2}, {4, NI}}) == q(3));
  CHECK(max_cycle_mean(TropMatrix{{1, 5}, {-3, 2}}) == q(2));
  CHECK(max_cycle_mean(TropMatrix{{NI, 1}, {NI, NI}}).is_neg_inf());
  CHECK(max_cycle_mean(TropMatrix{{NI, 1, NI}, {NI, NI, 2}, {0, NI, NI}}) == q(1));
  CHECK(max_cycle_mean(TropMatrix{{NI, 1}, {2, NI}}) == RatScalar(Rational(3, 2)));
}

TEST_CASE("max_cycle_mean agrees with simple-cycle enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -10, 10, 0.3);
    const auto expected = oracle::max_cycle_mean_brute(a);
    const RatScalar got = max_cycle_mean(a);
    if (expected) {
      REQUIRE(got == RatScalar(*expected));
    } else {
      REQUIRE(got.is_neg_inf());
    }
  }
}

TEST_CASE("critical_cycle examples") {
  const TropMatrix a{{1, 5}, {-3, 2}};
  CHECK(critical_cycle(a, Rational(2)) == CriticalCycle{{1}});
  const auto two = critical_cycle(TropMatrix{{NI, 2}, {4, NI}}, Rational(3));
  CHECK(two == CriticalCycle{{0, 1}});
  CHECK(two.length() == 2);
  CHECK(critical_cycle(TropMatrix{{0, NI}, {NI, 0}}, Rational(0)) == CriticalCycle{{0}});
}

TEST_CASE("critical cycles attain the maximum cycle mean exactly") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -10, 10, 0.3);
    const RatScalar lambda = max_cycle_mean(a);
    if (lambda.is_neg_inf()) continue;
    const CriticalCycle z = critical_cycle(a, lambda.value());
    REQUIRE(z.length() >= 1);
    for (auto v : z.vertices) REQUIRE(a(v, z.next(v)).is_finite());
    REQUIRE(cycle_mean(a, z) == lambda.value());
    REQUIRE(critical_cycle(a, lambda.value()) == z);
  }
}

TEST_CASE("kleene_star examples") {
  CHECK(kleene_star(RatTropMatrix{{q(-1)}}) == RatTropMatrix{{q(0)}});
  CHECK(kleene_star(RatTropMatrix{{q(-1), q(-2)}, {q(-3), q(0)}}) ==
        RatTropMatrix{{q(0), q(-2)}, {q(-3), q(0)}});
  CHECK_THROWS_AS(kleene_star(RatTropMatrix{{q(1)}}), DivergentStarError);
  CHECK_THROWS_AS(kleene_star(RatTropMatrix{{RNI, q(3)}, {q(-1), RNI}}), DivergentStarError);
}

TEST_CASE("kleene_star is the fixpoint I + A A*") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -10, 10, 0.3);
    const RatScalar lambda = max_cycle_mean(a);
    if (lambda.is_neg_inf()) continue;
    const RatTropMatrix norm = normalize(a, lambda.value() + Rational(rng() % 3));
    const RatTropMatrix star = kleene_star(norm);
    REQUIRE(star == mat_add(identity<RatScalar>(n), mat_mul(norm, star)));
    // Also the explicit finite sum I + A + ... + A^(n-1).
    RatTropMatrix sum = identity<RatScalar>(n);
    RatTropMatrix p = identity<RatScalar>(n);
    for (std::size_t k = 1; k < n; ++k) {
      p = mat_mul(p, norm);
      sum = mat_add(sum, p);
    }
    REQUIRE(star == sum);
  }
}

TEST_CASE("normalised matrices have zero maximum cycle mean") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -10, 10, 0.3);
    const RatScalar lambda = max_cycle_mean(a);
    if (lambda.is_neg_inf()) continue;
    REQUIRE(max_cycle_mean(normalize(a, lambda.value())) == q(0));
  }
}

TEST_CASE("csr_decompose hand example") {
  const TropMatrix a{{0, NI}, {NI, -1}};
  const CsrDecomposition d = csr_decompose(a);
  CHECK(d.lambda == Rational(0));
  CHECK(d.cycle == CriticalCycle{{0}});
  CHECK(d.S == RatTropMatrix{{q(0), RNI}, {RNI, RNI}});
  CHECK(d.B == RatTropMatrix{{RNI, RNI}, {RNI, q(-1)}});
  CHECK(d.U == identity<RatScalar>(2));
  CHECK(d.C == RatTropMatrix{{q(0), RNI}, {RNI, RNI}});
  CHECK(d.R == RatTropMatrix{{q(0), RNI}, {RNI, RNI}});
  CHECK(csr_power(d, 5) == RatTropMatrix{{q(0), RNI}, {RNI, q(-5)}});
  CHECK(csr_power(d, 5) == to_rational(mat_pow(a, 5)));
  CHECK_THROWS_AS(csr_decompose(TropMatrix{{NI, 1}, {NI, NI}}), AcyclicError);
}

TEST_CASE("csr_decompose structural invariants") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const TropMatrix a = oracle::random_matrix(rng, n, n, -10, 10, 0.3);
    if (max_cycle_mean(a).is_neg_inf()) continue;
    const CsrDecomposition d = csr_decompose(a);
    const auto& z = d.cycle;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool arc = z.contains(i) && z.next(i) == j;
        if (arc) {
          REQUIRE(d.S(i, j) == RatScalar(Rational(a(i, j).value()) - d.lambda));
        } else {
          REQUIRE(d.S(i, j).is_neg_inf());
        }
        if (z.contains(i) || z.contains(j)) REQUIRE(d.B(i, j).is_neg_inf());
        if (!z.contains(j)) REQUIRE(d.C(i, j).is_neg_inf());
        if (!z.contains(i)) REQUIRE(d.R(i, j).is_neg_inf());
      }
    }
    // S^l_Z restricted to Z is the identity: the cycle has normalised weight 0.
    const RatTropMatrix sl = mat_pow(d.S, z.length());
    for (auto v : z.vertices) REQUIRE(sl(v, v) == q(0));
  }
}

TEST_CASE("csr_power reproduces mat_pow past n^2 on strongly connected matrices") {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const TropMatrix a = random_strongly_connected(rng, n, -5, 5, 0.3);
    const CsrDecomposition d = csr_decompose(a);
    const std::uint64_t lo = n * n;
    const std::uint64_t hi = lo + 2 * d.cycle.length();
    for (std::uint64_t t = lo; t <= hi; ++t) {
      REQUIRE(csr_power(d, t) == to_rational(mat_pow(a, t)));
    }
    CHECK(observed_csr_threshold(a, d, hi) <= lo);
  }
}

TEST_CASE("csr_power with t a multiple of the cycle length uses S^0") {
  const TropMatrix a{{NI, 2}, {4, NI}};
  const CsrDecomposition d = csr_decompose(a);
  REQUIRE(d.cycle.length() == 2);
  const RatTropMatrix core = mat_mul(d.C, d.R);
  CHECK(csr_power(d, 6) == mat_add(scale(RatScalar(Rational(18)), core), mat_pow(d.B, 6)));
  CHECK(csr_power(d, 6) == to_rational(mat_pow(a, 6)));
}
