#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gp/errors.hpp"
#include "gp/exact_arith.hpp"
#include "oracles.hpp"

using namespace gp;

TEST_CASE("isqrt small and large values") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(2) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK(isqrt(BigInt("100000000000000000000000000000000000000000")) == BigInt("316227766016837933199"));
  CHECK(isqrt(pow2(200)) == pow2(100));
  CHECK(isqrt(pow2(200) - 1) == pow2(100) - 1);
  CHECK_THROWS_AS(isqrt(-1), DomainError);
}

TEST_CASE("isqrt agrees with mpz_sqrt and brackets n") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    BigInt n = oracle::random_bigint(rng, 2000);
    BigInt r = isqrt(n);
    BigInt ref;
    mpz_sqrt(ref.get_mpz_t(), n.get_mpz_t());
    REQUIRE(r == ref);
    REQUIRE(r * r <= n);
    REQUIRE(n < (r + 1) * (r + 1));
  }
}

TEST_CASE("BigRat parsing is exact") {
  CHECK(BigRat::parse("0.2928") == BigRat(2928, 10000));
  CHECK(BigRat::parse("0.2928").to_string() == "183/625");
  CHECK(BigRat::parse("-3/6") == BigRat(-1, 2));
  CHECK(BigRat::parse("+17") == BigRat(17));
  CHECK(BigRat::parse("-0.5") == BigRat(-1, 2));
  CHECK_THROWS_AS(BigRat::parse("-.5"), ParseError);
  CHECK(BigRat(6, -4).to_string() == "-3/2");
  CHECK_THROWS_AS(BigRat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(BigRat::parse("abc"), ParseError);
  CHECK_THROWS_AS(BigRat::parse("1.2.3"), ParseError);
  CHECK_THROWS_AS(BigRat(1, 0), DomainError);
  CHECK_THROWS_AS(BigRat(1) / BigRat(0), DomainError);
}

TEST_CASE("BigRat floor, ceil and pow2 scaling") {
  CHECK(BigRat(-3, 2).floor() == -2);
  CHECK(BigRat(-3, 2).ceil() == -1);
  CHECK(BigRat(7, 2).floor() == 3);
  CHECK(BigRat(3).mul_pow2(-2) == BigRat(3, 4));
  CHECK(BigRat(3, 8).mul_pow2(3) == BigRat(3));
}

TEST_CASE("QSqrt2 rendering") {
  CHECK(QSqrt2(BigRat(3, 2)).to_string() == "3/2");
  CHECK(QSqrt2(BigRat(0), BigRat(-1, 2)).to_string() == "-1/2*sqrt2");
  CHECK(QSqrt2(1, -1).to_string() == "1-sqrt2");
  CHECK(QSqrt2::halfint(19, 13).to_string() == "-13+19/2*sqrt2");
  CHECK(QSqrt2(0).to_string() == "0");
  CHECK(to_decimal(QSqrt2::sqrt2(), 7) == "1.4142135");
  CHECK(to_decimal(-QSqrt2::sqrt2(), 3) == "-1.414");
  CHECK(to_significant(QSqrt2::halfint(309, 218), 7) == "0.4959953");
}

TEST_CASE("sign examples") {
  CHECK(sign(QSqrt2(3, -2)) == 1);   // 3 - 2 sqrt2 = 0.1716
  CHECK(sign(QSqrt2(-3, 2)) == -1);
  CHECK(sign(QSqrt2(0)) == 0);
  CHECK(sign(QSqrt2::halfint(1296121037, 916495974)) == 1);
  CHECK(sign(QSqrt2(BigInt("665857"), BigInt("-470832"))) == 1);  // Pell convergent, 7.5e-7
  CHECK(sign(QSqrt2(BigInt("-665857"), BigInt("470832"))) == -1);
}

TEST_CASE("sign trichotomy and agreement with the oracle") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    QSqrt2 x = oracle::random_qsqrt2(rng, 120, 60);
    QSqrt2 y = oracle::random_qsqrt2(rng, 120, 60);
    int n = (x < y) + (x == y) + (x > y);
    REQUIRE(n == 1);
    REQUIRE((x < y) == (sign(x - y) < 0));
    REQUIRE(sign(x) == -sign(-x));
    // sign(x) decides floor(x) >= 0.
    REQUIRE((sign(x) >= 0) == (oracle::floor_qsqrt2(x) >= 0));
  }
}

TEST_CASE("floor_q examples") {
  CHECK(floor_q(QSqrt2::sqrt2()) == 1);
  CHECK(floor_q(-QSqrt2::sqrt2()) == -2);
  CHECK(floor_q(QSqrt2(BigRat(3, 2))) == 1);
  CHECK(floor_q(QSqrt2(BigRat(-3, 2))) == -2);
  CHECK(floor_q(QSqrt2(0, BigInt(759250125))) == BigInt(1073741824));
  CHECK(floor_q(QSqrt2(BigRat(1, 2), BigRat(1, 2))) == 1);
  CHECK(ceil_q(QSqrt2::sqrt2()) == 2);
  CHECK(ceil_q(QSqrt2(4)) == 4);
}

TEST_CASE("floor_q against the MPFR oracle") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    QSqrt2 x = i % 2 ? oracle::random_qsqrt2(rng, 200, 100) : oracle::random_qsqrt2(rng, 20, 8);
    BigInt f = floor_q(x);
    REQUIRE(f == oracle::floor_qsqrt2(x));
    REQUIRE(QSqrt2(f) <= x);
    REQUIRE(x < QSqrt2(f + 1));
    REQUIRE(ceil_q(x) == -floor_q(-x));
    QSqrt2 fr = frac_q(x);
    REQUIRE(sign(fr) >= 0);
    REQUIRE(fr < QSqrt2(1));
  }
}

TEST_CASE("floor_scaled_sqrt2") {
  CHECK(floor_scaled_sqrt2(1, 0) == 1);
  CHECK(floor_scaled_sqrt2(759250125, 0) == BigInt(1073741824));
  CHECK(floor_scaled_sqrt2(1, 10) == 1448);
  CHECK(floor_scaled_sqrt2(3, -1) == 2);
  CHECK(floor_scaled_sqrt2(0, 5) == 0);
  CHECK_THROWS_AS(floor_scaled_sqrt2(-1, 0), DomainError);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10000; ++i) {
    BigInt alpha = oracle::random_bigint(rng, 300);
    long m = static_cast<long>(rng() % 400) - 100;
    REQUIRE(floor_scaled_sqrt2(alpha, m) == oracle::floor_qsqrt2(QSqrt2(0, alpha).mul_pow2(m)));
  }
}

TEST_CASE("field axioms in Q(sqrt2)") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    QSqrt2 x = oracle::random_qsqrt2(rng, 80, 40);
    QSqrt2 y = oracle::random_qsqrt2(rng, 80, 40);
    QSqrt2 z = oracle::random_qsqrt2(rng, 80, 40);
    REQUIRE(x + y == y + x);
    REQUIRE(x * y == y * x);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE(x + (-x) == QSqrt2(0));
    if (!y.is_zero()) {
      REQUIRE((x / y) * y == x);
      REQUIRE(y * (QSqrt2(1) / y) == QSqrt2(1));
    }
    REQUIRE(x.norm() == (x * x.conjugate()).a());
  }
  CHECK_THROWS_AS(QSqrt2(1) / QSqrt2(0), DomainError);
  CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == QSqrt2(2));
}
