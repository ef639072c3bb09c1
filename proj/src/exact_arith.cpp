#include "gp/exact_arith.hpp"

#include <cctype>
#include <cmath>

#include "gp/errors.hpp"

namespace gp {

std::size_t bit_length(const BigInt& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("floor_div: division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("ceil_div: division by zero");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt pow2(std::size_t e) {
  BigInt r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

// ---------------------------------------------------------------------------
// BigRat

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("BigRat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  std::size_t int_end = digits(i);
  if (int_end == i) throw ParseError("expected digits", i);
  BigInt num(s.substr(i, int_end - i));
  BigInt den = 1;
  std::size_t pos = int_end;
  if (pos < s.size() && s[pos] == '.') {
    std::size_t frac_end = digits(pos + 1);
    if (frac_end == pos + 1) throw ParseError("expected digits after '.'", pos + 1);
    for (std::size_t j = pos + 1; j < frac_end; ++j) {
      num = num * 10 + (s[j] - '0');
      den *= 10;
    }
    pos = frac_end;
  } else if (pos < s.size() && s[pos] == '/') {
    std::size_t den_end = digits(pos + 1);
    if (den_end == pos + 1) throw ParseError("expected denominator", pos + 1);
    den = BigInt(s.substr(pos + 1, den_end - pos - 1));
    if (den == 0) throw ParseError("zero denominator", pos + 1);
    pos = den_end;
  }
  if (pos != s.size()) throw ParseError("unexpected character in rational", pos);
  if (neg) num = -num;
  return BigRat(num, den);
}

BigRat BigRat::abs() const { return sign() < 0 ? -*this : *this; }

std::string BigRat::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRat BigRat::mul_pow2(long e) const {
  mpq_class r;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), v_.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), v_.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return BigRat(std::move(r));
}

BigRat operator+(const BigRat& x, const BigRat& y) { return BigRat(mpq_class(x.v_ + y.v_)); }
BigRat operator-(const BigRat& x, const BigRat& y) { return BigRat(mpq_class(x.v_ - y.v_)); }
BigRat operator*(const BigRat& x, const BigRat& y) { return BigRat(mpq_class(x.v_ * y.v_)); }
BigRat operator/(const BigRat& x, const BigRat& y) {
  if (y.is_zero()) throw DomainError("BigRat: division by zero");
  return BigRat(mpq_class(x.v_ / y.v_));
}
BigRat operator-(const BigRat& x) { return BigRat(mpq_class(-x.v_)); }

// ---------------------------------------------------------------------------
// QSqrt2

QSqrt2 QSqrt2::halfint(const BigInt& c, const BigInt& d) {
  return {BigRat(BigInt(-d)), BigRat(c, 2)};
}

double QSqrt2::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(2.0); }

std::string QSqrt2::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string bterm;
  BigRat mag = b_.abs();
  bterm = mag == BigRat(1) ? "sqrt2" : mag.to_string() + "*sqrt2";
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + bterm;
  return a_.to_string() + (b_.sign() < 0 ? "-" : "+") + bterm;
}

QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
  return {x.a_ * y.a_ + BigRat(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) {
  if (y.is_zero()) throw DomainError("QSqrt2: division by zero");
  BigRat n = y.norm();
  QSqrt2 p = x * y.conjugate();
  return {p.a_ / n, p.b_ / n};
}

std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) { return sign(x - y) <=> 0; }

// ---------------------------------------------------------------------------

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt: negative argument");
  if (n < 2) return n;
  // Newton from above: x_0 = 2^ceil(bits/2) >= sqrt(n), iterates decrease
  // monotonically to floor(sqrt(n)).
  BigInt x = pow2((bit_length(n) + 1) / 2);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

int sign(const QSqrt2& x) {
  int sa = x.a().sign();
  int sb = x.b().sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Mixed signs: |a| vs |b| sqrt2, i.e. a^2 vs 2 b^2 (never equal).
  return (x.a() * x.a() > BigRat(2) * x.b() * x.b()) ? sa : sb;
}

namespace {

// Integer estimate of floor(x) from floor(B sqrt2) = +-isqrt(2 B^2), exact
// except for the final certification below.
BigInt floor_estimate(const QSqrt2& x) {
  BigInt den = lcm(x.a().den(), x.b().den());
  BigInt big_a = x.a().num() * (den / x.a().den());
  BigInt big_b = x.b().num() * (den / x.b().den());
  BigInt s = 0;
  if (big_b > 0) {
    s = isqrt(2 * big_b * big_b);
  } else if (big_b < 0) {
    s = -isqrt(2 * big_b * big_b) - 1;
  }
  return floor_div(big_a + s, den);
}

}  // namespace

BigInt floor_q(const QSqrt2& x) {
  BigInt n = floor_estimate(x);
  while (sign(x - QSqrt2(n)) < 0) --n;
  while (sign(x - QSqrt2(BigInt(n + 1))) >= 0) ++n;
  return n;
}

BigInt ceil_q(const QSqrt2& x) { return -floor_q(-x); }

BigInt floor_scaled_sqrt2(const BigInt& alpha, long m) {
  if (alpha < 0) throw DomainError("floor_scaled_sqrt2: alpha must be >= 0");
  if (m >= 0) {
    BigInt n = alpha * alpha;
    n <<= static_cast<mp_bitcnt_t>(2 * m + 1);
    return isqrt(n);
  }
  return floor_q(QSqrt2(BigRat(0), BigRat(alpha).mul_pow2(m)));
}

QSqrt2 frac_q(const QSqrt2& x) { return x - QSqrt2(floor_q(x)); }

std::string to_decimal(const QSqrt2& x, int places) {
  if (places < 0) places = 0;
  bool neg = sign(x) < 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  QSqrt2 mag = neg ? -x : x;
  BigInt n = floor_q(mag * QSqrt2(scale));
  std::string digits = n.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (neg && n != 0) digits.insert(0, "-");
  return digits;
}

std::string to_significant(const QSqrt2& x, int digits) {
  if (x.is_zero()) return "0";
  QSqrt2 mag = sign(x) < 0 ? -x : x;
  BigInt ip = floor_q(mag);
  int places = 0;
  if (ip > 0) {
    int int_digits = static_cast<int>(ip.get_str().size());
    places = std::max(0, digits - int_digits);
  } else {
    int zeros = 0;
    QSqrt2 scaled = mag * QSqrt2(10);
    while (floor_q(scaled) == 0) {
      ++zeros;
      scaled = scaled * QSqrt2(10);
    }
    places = zeros + digits;
  }
  return to_decimal(x, places);
}

}  // namespace gp
