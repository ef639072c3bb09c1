#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gp/errors.hpp"
#include "gp/expression.hpp"
#include "gp/precision_reals.hpp"
#include "oracles.hpp"

using namespace gp;

namespace {

BigRat max_width(int bits) { return BigRat(1).mul_pow2(1 - bits); }

}  // namespace

TEST_CASE("pi enclosures contain the MPFR bounds and nest") {
  std::optional<RealInterval> prev;
  for (int bits : {8, 16, 53, 64, 128, 500, 1000, 2000}) {
    RealInterval pi = const_pi(bits);
    auto [lo, hi] = oracle::pi_bounds(bits + 64);
    CHECK(pi.lo <= lo);
    CHECK(hi <= pi.hi);
    CHECK(pi.width() <= max_width(bits));
    if (prev) CHECK(prev->encloses(pi));
    prev = pi;
  }
  CHECK_THROWS_AS(const_pi(4), DomainError);
}

TEST_CASE("e enclosures contain the MPFR bounds and nest") {
  std::optional<RealInterval> prev;
  for (int bits : {8, 16, 53, 64, 128, 500, 1000, 2000}) {
    RealInterval e = const_e(bits);
    auto [lo, hi] = oracle::e_bounds(bits + 64);
    CHECK(e.lo <= lo);
    CHECK(hi <= e.hi);
    CHECK(e.width() <= max_width(bits));
    if (prev) CHECK(prev->encloses(e));
    prev = e;
  }
}

TEST_CASE("sqrt2 enclosure") {
  RealInterval s = const_sqrt2(100);
  CHECK(s.contains(QSqrt2::sqrt2()));
  CHECK(s.width() <= max_width(100));
}

TEST_CASE("eval_expr of 1 - pi^2/e^3") {
  auto expr = parse_expression("1-pi^2/e^3");
  auto [lo, hi] = oracle::corollary_eps_bounds(1200);
  for (int bits : {32, 64, 256, 1000}) {
    RealInterval x = eval_expr(*expr, bits);
    CHECK(x.lo <= lo);
    CHECK(hi <= x.hi);
    CHECK(x.width() <= max_width(bits));
  }
  CHECK(to_decimal(QSqrt2(eval_expr(*expr, 64).lo), 7) == "0.5086213");
}

TEST_CASE("eval_expr of exact expressions encloses the exact value") {
  for (const char* text : {"(1+sqrt2)^5", "3/7-sqrt2", "1/(1+sqrt2)", "-(2-sqrt2)^-3", "0.2928"}) {
    auto expr = parse_expression(text);
    QSqrt2 v = *exact_value(*expr);
    RealInterval x = eval_expr(*expr, 200);
    CHECK(x.contains(v));
    CHECK(x.width() <= max_width(200) * std::max(BigRat(1), x.magnitude_lower()));
  }
}

TEST_CASE("interval division by an interval containing zero") {
  CHECK_THROWS_AS(eval_expr(*parse_expression("1/(pi-pi)"), 64), EvaluationError);
  CHECK_THROWS_AS(exact_value(*parse_expression("1/(sqrt2-sqrt2)")), DomainError);
}

TEST_CASE("parser errors carry positions") {
  auto position = [](const char* text) {
    try {
      parse_expression(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("1+*2") == 2);
  CHECK(position("1-pi^2/x") == 7);
  CHECK(position("(1+2") == 4);
  CHECK(position("") == 0);
  CHECK(position("2^x") == 2);
}

TEST_CASE("parser accepts the epsilon notations") {
  CHECK(exact_value(*parse_expression("0.2928")) == QSqrt2(BigRat(183, 625)));
  CHECK(exact_value(*parse_expression("(309/2)*sqrt2-218")) == QSqrt2::halfint(309, 218));
  CHECK(exact_value(*parse_expression("1 − sqrt2/2")) == QSqrt2::halfint(-1, -1));
  CHECK(exact_value(*parse_expression("-sqrt2^2")) == QSqrt2(-2));
  CHECK(exact_value(*parse_expression("2^-2")) == QSqrt2(BigRat(1, 4)));
  CHECK(is_exact(*parse_expression("1-pi^2/e^3")) == false);
  CHECK_FALSE(exact_value(*parse_expression("pi")).has_value());
}

namespace {

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  int pick = static_cast<int>(rng() % (depth > 0 ? 9 : 4));
  switch (pick) {
    case 0:
      return Expr::make_literal(BigRat(static_cast<long>(rng() % 50) - 10, static_cast<long>(rng() % 9) + 1));
    case 1:
      return Expr::make_sqrt2();
    case 2:
      return Expr::make_literal(BigRat(static_cast<long>(rng() % 20)));
    case 3:
      return Expr::make_sqrt2();
    case 4:
      return Expr::make_neg(random_expr(rng, depth - 1));
    case 5:
      return Expr::make_binary(Expr::Kind::Add, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6:
      return Expr::make_binary(Expr::Kind::Sub, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7:
      return Expr::make_binary(Expr::Kind::Mul, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default:
      return Expr::make_pow(random_expr(rng, depth - 1), static_cast<long>(rng() % 4));
  }
}

}  // namespace

TEST_CASE("rendering reparses to the same value and text") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 2000; ++i) {
    ExprPtr e = random_expr(rng, 4);
    std::string text = to_string(*e);
    ExprPtr back = parse_expression(text);
    REQUIRE(to_string(*back) == text);
    REQUIRE(exact_value(*back) == exact_value(*e));
  }
  for (const char* text : {"1-pi^2/e^3", "-(pi+e)^2", "pi/(e*sqrt2)", "2-(3-4)"}) {
    std::string canon = to_string(*parse_expression(text));
    CHECK(to_string(*parse_expression(canon)) == canon);
  }
}

TEST_CASE("refine is monotone and cached") {
  RefinableReal x = RefinableReal::parse("1-pi^2/e^3");
  RealInterval a = x.refine(64);
  RealInterval b = x.refine(256);
  RealInterval c = x.refine(64);
  CHECK(a.encloses(b));
  CHECK(b.encloses(c));
  CHECK(b.width() <= max_width(256));
  RefinableReal copy = x;
  CHECK(copy.refine(100).width() <= b.width());
}

TEST_CASE("certified_floor agrees with the exact floor at interior points") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    QSqrt2 x = oracle::random_qsqrt2(rng, 30, 20);
    QSqrt2 offset = i % 3 == 0 ? QSqrt2(0) : oracle::random_qsqrt2(rng, 20, 10);
    BigInt addend = oracle::random_bigint(rng, 60);
    QSqrt2 value = QSqrt2::sqrt2() * (QSqrt2(addend) + offset + x);
    if (value.is_rational() && value.a().is_integer()) continue;
    REQUIRE(certified_floor(RefinableReal::from_exact(x), offset, addend) == floor_q(value));
  }
}

TEST_CASE("certified_floor of an exact integer is undecidable") {
  RefinableReal half_root = RefinableReal::parse("sqrt2/2");
  try {
    certified_floor(half_root, QSqrt2(0), 0, 256);
    FAIL("expected Undecidable");
  } catch (const Undecidable& e) {
    CHECK(e.max_bits() == 256);
  }
  // pi is irrational, so the floor is decided.
  CHECK(certified_floor(RefinableReal::parse("pi"), QSqrt2(0), 0) == 4);
}
