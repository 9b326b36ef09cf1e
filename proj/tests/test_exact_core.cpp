#include "doctest.h"

#include <stdexcept>

#include "conesum/rational.hpp"
#include "conesum/series.hpp"
#include "conesum/stirling.hpp"

using namespace conesum;

TEST_CASE("rational arithmetic stays canonical") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a / b == Rational(3, 2));
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).toString() == "-1/2");
  CHECK(Rational("22/7") == Rational(22, 7));
  CHECK(Rational("-5") == Rational(-5));
  CHECK(Rational(7).toString() == "7");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational("abc"), std::invalid_argument);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-1, 2).pow(2) == Rational(1, 4));
}

TEST_CASE("rational string round trip") {
  for (const Rational& r : {Rational(11, 3), Rational(-7, 5), Rational(0), Rational(42)})
    CHECK(Rational(r.toString()) == r);
}

TEST_CASE("rational helpers") {
  CHECK(Rational::factorial(0) == Rational(1));
  CHECK(Rational::factorial(5) == Rational(120));
  CHECK(Rational::binomial(5, 2) == Rational(10));
  CHECK(Rational::binomial(5, 7) == Rational(0));
  CHECK(Rational::binomial(5, -1) == Rational(0));
  CHECK(Rational::risingFactorial(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(Rational::risingFactorial(Rational(17, 3), 0) == Rational(1));
  CHECK(Rational::risingFactorial(Rational(3), 3) == Rational(60));
}

TEST_CASE("stirling number examples") {
  CHECK(stirling1(3, 2) == Rational(3));
  CHECK(stirling1(0, 0) == Rational(1));
  CHECK(stirling1(4, 2) == Rational(11));
  CHECK(stirling1(4, 5) == Rational(0));

  CHECK(stirling2(3, 2) == Rational(3));
  CHECK(stirling2(6, 6) == Rational(1));
  CHECK(stirling2(4, 2) == Rational(7));

  CHECK(stirling1B(2, 1) == Rational(4));
  CHECK(stirling1B(5, 5) == Rational(1));
  CHECK(stirling1B(2, 0) == Rational(3));

  CHECK(stirling2B(2, 1) == Rational(4));
  CHECK(stirling2B(7, 7) == Rational(1));
  CHECK(stirling2B(2, 0) == Rational(1));
}

TEST_CASE("r-stirling examples and specializations") {
  const Rational half(1, 2);
  CHECK(rStirling1(2, 1, half) == Rational(2));
  CHECK(rStirling2(2, 1, half) == Rational(2));
  CHECK(rStirling1(6, 6, Rational(7, 3)) == Rational(1));
  CHECK(rStirling2(5, 5, Rational(-2)) == Rational(1));
  CHECK(rStirling1(3, 1, Rational(0)) == stirling1(3, 1));
  CHECK(rStirling1(3, 1, Rational(0)) == Rational(2));
  CHECK(rStirling2(3, 2, Rational(1)) == Rational(6));
  CHECK(rStirling2(3, 2, Rational(1)) == stirling2(4, 3));

  SUBCASE("r = 0 and r = 1 reproduce the classical families") {
    for (unsigned n = 0; n <= 10; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        CHECK(rStirling1(n, k, Rational(0)) == stirling1(n, k));
        CHECK(rStirling2(n, k, Rational(0)) == stirling2(n, k));
        CHECK(rStirling1(n, k, Rational(1)) == stirling1(n + 1, k + 1));
        CHECK(rStirling2(n, k, Rational(1)) == stirling2(n + 1, k + 1));
      }
  }

  SUBCASE("r = 1/2 matches the B-analogues, n <= 20") {
    for (unsigned n = 0; n <= 20; ++n)
      for (unsigned k = 0; k <= n; ++k) {
        const Rational scale =
            Rational(2).pow(k) / Rational(2).pow(n);
        CHECK(rStirling1(n, k, half) == scale * stirling1B(n, k));
        CHECK(rStirling2(n, k, half) == scale * stirling2B(n, k));
      }
  }
}

TEST_CASE("brute-force oracle examples") {
  CHECK(bruteStirling(BruteKind::First, 3, 2, 0) == Rational(3));
  CHECK(bruteStirling(BruteKind::First, 7, 7, 0) == Rational(1));
  // partitions of {1..4} into 2 blocks keeping 1 and 2 apart:
  // 1|234, 2|134, 13|24, 14|23
  CHECK(bruteStirling(BruteKind::Second, 4, 2, 2) == Rational(4));
  CHECK(bruteStirling(BruteKind::Second, 4, 2, 0) == Rational(7));
  CHECK_THROWS_AS(bruteStirling(BruteKind::First, 11, 3, 0), std::invalid_argument);
}

TEST_CASE("brute-force oracle agrees with the tables on its full range") {
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned k = 0; k <= n; ++k)
      for (unsigned r = 0; r <= n; ++r) {
        if (k < r) {
          // fewer cycles/blocks than pinned elements
          CHECK(bruteStirling(BruteKind::First, n, k, r) == Rational(0));
          CHECK(bruteStirling(BruteKind::Second, n, k, r) == Rational(0));
          continue;
        }
        // table entries are shifted: rStirling(n', k', r) = <n'+r, k'+r>_r
        CHECK(bruteStirling(BruteKind::First, n, k, r) ==
              rStirling1(n - r, k - r, Rational(r)));
        CHECK(bruteStirling(BruteKind::Second, n, k, r) ==
              rStirling2(n - r, k - r, Rational(r)));
      }
}

TEST_CASE("generating-function oracles reproduce the tables (spot checks)") {
  CHECK(seriesCoefficientOracle(GfCatalog::Stirling1, 3, 2) == Rational(3));
  CHECK(seriesCoefficientOracle(GfCatalog::Stirling2, 2, 1) == Rational(1));
  CHECK(seriesCoefficientOracle(GfCatalog::Stirling1, 0, 0) == Rational(1));
  for (unsigned n = 0; n <= 9; ++n)
    for (unsigned k = 0; k <= std::min(n, 8u); ++k) {
      CHECK(seriesCoefficientOracle(GfCatalog::Stirling1, n, k) == stirling1(n, k));
      CHECK(seriesCoefficientOracle(GfCatalog::Stirling2, n, k) == stirling2(n, k));
      CHECK(seriesCoefficientOracle(GfCatalog::Stirling1B, n, k) == stirling1B(n, k));
      CHECK(seriesCoefficientOracle(GfCatalog::Stirling2B, n, k) == stirling2B(n, k));
      for (const Rational& r : {Rational(0), Rational(1, 2), Rational(3, 2)}) {
        CHECK(seriesCoefficientOracle(GfCatalog::RStirling1, n, k, r) ==
              rStirling1(n, k, r));
        CHECK(seriesCoefficientOracle(GfCatalog::RStirling2, n, k, r) ==
              rStirling2(n, k, r));
      }
    }
}

TEST_CASE("orthogonality and composition-count identities (small grid)") {
  for (unsigned twoB = 0; twoB <= 6; ++twoB) {
    const Rational b = Rational(static_cast<std::int64_t>(twoB)) / Rational(2);
    for (unsigned n = 1; n <= 8; ++n)
      for (unsigned j = 0; j <= n; ++j) {
        Rational sum(0), alt(0);
        for (unsigned k = 0; k <= n; ++k) {
          const Rational term = rStirling1(n, k, b) * rStirling2(k, j, b);
          sum += term;
          alt += (k % 2 == 0) ? term : -term;
        }
        CHECK(sum == Rational::factorial(n) / Rational::factorial(j) *
                         Rational::binomial(static_cast<std::int64_t>(n) + twoB - 1,
                                            static_cast<std::int64_t>(n) - j));
        if (j < n) CHECK(alt == Rational(0));
      }
  }
}

TEST_CASE("memo limit guard") {
  const unsigned old = stirlingLimit();
  setStirlingLimit(16);
  CHECK_THROWS_AS(stirling1(17, 3), std::length_error);
  setStirlingLimit(old);
  CHECK(stirling1(17, 3) > Rational(0));
}
