#include "gp/precision_reals.hpp"

#include <algorithm>
#include <utility>

#include "gp/errors.hpp"

namespace gp {

namespace {

// Rational endpoints are rounded outward to `p` significant bits after every
// operation so that their size stays proportional to the working precision.
long magnitude_exponent(const BigRat& r) {
  return static_cast<long>(bit_length(r.num())) - static_cast<long>(bit_length(r.den()));
}

BigRat round_down(const BigRat& r, long p) {
  if (r.is_zero()) return r;
  long shift = p - magnitude_exponent(r);
  BigInt n = r.mul_pow2(shift).floor();
  return BigRat(n).mul_pow2(-shift);
}

BigRat round_up(const BigRat& r, long p) {
  if (r.is_zero()) return r;
  long shift = p - magnitude_exponent(r);
  BigInt n = r.mul_pow2(shift).ceil();
  return BigRat(n).mul_pow2(-shift);
}

struct ZeroDivisor {};

RealInterval rounded(BigRat lo, BigRat hi, long p) {
  return {round_down(lo, p), round_up(hi, p), static_cast<int>(p)};
}

RealInterval mul(const RealInterval& x, const RealInterval& y, long p) {
  BigRat c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return rounded(*mn, *mx, p);
}

RealInterval div(const RealInterval& x, const RealInterval& y, long p) {
  if (y.contains_zero()) throw ZeroDivisor{};
  RealInterval inv = rounded(BigRat(1) / y.hi, BigRat(1) / y.lo, p);
  return mul(x, inv, p);
}

BigRat rat_pow(const BigRat& x, long n) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(n));
  return BigRat(num, den);
}

RealInterval ipow(const RealInterval& x, long n, long p) {
  if (n == 0) return {BigRat(1), BigRat(1), static_cast<int>(p)};
  if (n < 0) return div({BigRat(1), BigRat(1), 0}, ipow(x, -n, p), p);
  BigRat a = rat_pow(x.lo, n);
  BigRat b = rat_pow(x.hi, n);
  if (n % 2 == 1 || x.lo.sign() >= 0) return rounded(a, b, p);
  if (x.hi.sign() <= 0) return rounded(b, a, p);
  return rounded(BigRat(0), std::max(a, b), p);
}

RealInterval eval_at(const Expr& e, long p) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Literal:
      return {e.literal, e.literal, static_cast<int>(p)};
    case K::Pi:
      return const_pi(static_cast<int>(p));
    case K::E:
      return const_e(static_cast<int>(p));
    case K::Sqrt2:
      return const_sqrt2(static_cast<int>(p));
    case K::Neg: {
      RealInterval x = eval_at(*e.lhs, p);
      return {-x.hi, -x.lo, static_cast<int>(p)};
    }
    case K::Pow:
      return ipow(eval_at(*e.lhs, p), e.exponent, p);
    case K::Add: {
      RealInterval x = eval_at(*e.lhs, p), y = eval_at(*e.rhs, p);
      return rounded(x.lo + y.lo, x.hi + y.hi, p);
    }
    case K::Sub: {
      RealInterval x = eval_at(*e.lhs, p), y = eval_at(*e.rhs, p);
      return rounded(x.lo - y.hi, x.hi - y.lo, p);
    }
    case K::Mul:
      return mul(eval_at(*e.lhs, p), eval_at(*e.rhs, p), p);
    case K::Div:
      return div(eval_at(*e.lhs, p), eval_at(*e.rhs, p), p);
  }
  throw EvaluationError("unknown expression node");
}

// atan(1/x) * 2^p to within +-(terms + 1) units. Every term
// floor(2^p / ((2k+1) x^(2k+1))) is exact by the nested-floor identity, so each
// contributes less than one unit of error; the alternating tail after the last
// nonzero power is below one unit.
std::pair<BigInt, long> atan_inv_fixed(unsigned long x, long p) {
  BigInt power = pow2(static_cast<std::size_t>(p)) / x;
  BigInt x2 = BigInt(x) * x;
  BigInt sum = 0;
  long k = 0;
  while (power != 0) {
    BigInt term = power / (2 * k + 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power /= x2;
    ++k;
  }
  return {sum, k};
}

// Rounds an enclosure [lo, hi] of width far below 2^-g outward onto the grid
// 2^-g with two extra grid steps of padding. Results for g1 < g2 are nested.
RealInterval snap_outward(const BigRat& lo, const BigRat& hi, int g, int bits) {
  BigInt l = lo.mul_pow2(g).floor() - 2;
  BigInt h = hi.mul_pow2(g).ceil() + 2;
  return {BigRat(l).mul_pow2(-g), BigRat(h).mul_pow2(-g), bits};
}

}  // namespace

BigRat RealInterval::magnitude_lower() const {
  if (contains_zero()) return BigRat(0);
  return lo.sign() > 0 ? lo : -hi;
}

std::string RealInterval::to_string() const { return "[" + lo.to_string() + ", " + hi.to_string() + "]"; }

RealInterval const_pi(int bits) {
  if (bits < 8) throw DomainError("const_pi: bits must be >= 8");
  const int g = bits + 2;
  const long p = g + 48;
  auto [a5, k5] = atan_inv_fixed(5, p);
  auto [a239, k239] = atan_inv_fixed(239, p);
  BigInt s = 16 * a5 - 4 * a239;
  BigInt err = 16 * (k5 + 1) + 4 * (k239 + 1);
  return snap_outward(BigRat(BigInt(s - err)).mul_pow2(-p), BigRat(BigInt(s + err)).mul_pow2(-p), g,
                      bits);
}

RealInterval const_e(int bits) {
  if (bits < 8) throw DomainError("const_e: bits must be >= 8");
  const int g = bits + 2;
  const long p = g + 48;
  // floor(2^p / k!) for k = 0, 1, ... until it vanishes; the omitted tail is
  // at most 2 * 2^p / K! < 2 units.
  BigInt term = pow2(static_cast<std::size_t>(p));
  BigInt sum = 0;
  long k = 0;
  while (term != 0) {
    sum += term;
    ++k;
    term /= k;
  }
  BigInt upper = sum + k + 2;
  return snap_outward(BigRat(sum).mul_pow2(-p), BigRat(upper).mul_pow2(-p), g, bits);
}

RealInterval const_sqrt2(int bits) {
  BigInt s = isqrt(pow2(2 * static_cast<std::size_t>(bits) + 1));
  return {BigRat(s).mul_pow2(-bits), BigRat(BigInt(s + 1)).mul_pow2(-bits), bits};
}

RealInterval eval_expr(const Expr& expr, int bits) {
  if (bits < 1) throw DomainError("eval_expr: bits must be positive");
  const BigRat tolerance = BigRat(1).mul_pow2(1 - bits);
  const long cap = 16L * bits + 8192;
  for (long p = bits + 32;; p *= 2) {
    try {
      RealInterval r = eval_at(expr, p);
      BigRat scale = std::max(BigRat(1), r.magnitude_lower());
      if (r.width() <= tolerance * scale) {
        r.bits = bits;
        return r;
      }
    } catch (const ZeroDivisor&) {
      if (p >= cap) throw EvaluationError("division by an interval containing zero");
    }
    if (p >= cap) throw EvaluationError("width contract not reached at precision cap");
  }
}

RefinableReal::RefinableReal(ExprPtr expr) : expr_(std::move(expr)), cache_(std::make_shared<Cache>()) {}

RefinableReal RefinableReal::parse(std::string_view text) { return RefinableReal(parse_expression(text)); }

RefinableReal RefinableReal::from_exact(const QSqrt2& x) {
  ExprPtr a = Expr::make_literal(x.a());
  if (x.is_rational()) return RefinableReal(a);
  ExprPtr b = Expr::make_binary(Expr::Kind::Mul, Expr::make_literal(x.b()), Expr::make_sqrt2());
  return RefinableReal(Expr::make_binary(Expr::Kind::Add, a, b));
}

RealInterval RefinableReal::refine(int bits) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& cached = cache_->interval;
  if (cached && cached->bits >= bits) return *cached;
  RealInterval fresh = eval_expr(*expr_, bits);
  if (cached) {
    fresh.lo = std::max(fresh.lo, cached->lo);
    fresh.hi = std::min(fresh.hi, cached->hi);
  }
  cached = fresh;
  return fresh;
}

BigInt certified_floor(const RefinableReal& x, const QSqrt2& offset, const BigInt& addend, int max_bits) {
  // sqrt2 * (v + a + b sqrt2 + x) = 2b + sqrt2 * (v + a + x)
  const BigRat shift = BigRat(2) * offset.b();
  const BigRat base = BigRat(addend) + offset.a();
  const int extra = static_cast<int>(bit_length(addend)) + 8;
  for (int bits = 64;; bits = std::min(2 * bits, std::max(max_bits, 64))) {
    RealInterval xi = x.refine(bits);
    RealInterval y{base + xi.lo, base + xi.hi, bits};
    RealInterval s = const_sqrt2(bits + extra);
    BigRat c[4] = {y.lo * s.lo, y.lo * s.hi, y.hi * s.lo, y.hi * s.hi};
    auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
    BigInt lo = (shift + *mn).floor();
    BigInt hi = (shift + *mx).floor();
    if (lo == hi) return lo;
    if (bits >= max_bits) throw Undecidable(max_bits);
  }
}

}  // namespace gp
