#pragma once

// Exact arithmetic over Q and Q(sqrt 2).
//
// BigInt is GMP's mpz_class. BigRat and QSqrt2 are immutable value types whose
// representation is canonical, so equality is structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gp {

using BigInt = mpz_class;

/// Number of bits of |n| (0 for n == 0).
std::size_t bit_length(const BigInt& n);

/// floor(num / den) for den != 0.
BigInt floor_div(const BigInt& num, const BigInt& den);
/// ceil(num / den) for den != 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

BigInt pow2(std::size_t e);

/// Canonical rational: gcd(num, den) == 1 and den > 0.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den);

  /// Accepts "p", "p/q", and decimal literals "d.ddd" (exact: "0.2928" is
  /// 2928/10000 reduced). Leading sign allowed.
  static BigRat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  BigInt floor() const { return floor_div(v_.get_num(), v_.get_den()); }
  BigInt ceil() const { return ceil_div(v_.get_num(), v_.get_den()); }
  BigRat abs() const;
  double to_double() const { return v_.get_d(); }

  /// "p" or "p/q".
  std::string to_string() const;

  /// x * 2^e, e of either sign.
  BigRat mul_pow2(long e) const;

  friend BigRat operator+(const BigRat& x, const BigRat& y);
  friend BigRat operator-(const BigRat& x, const BigRat& y);
  friend BigRat operator*(const BigRat& x, const BigRat& y);
  /// Throws DomainError when y == 0.
  friend BigRat operator/(const BigRat& x, const BigRat& y);
  friend BigRat operator-(const BigRat& x);
  BigRat& operator+=(const BigRat& y) { return *this = *this + y; }
  BigRat& operator-=(const BigRat& y) { return *this = *this - y; }
  BigRat& operator*=(const BigRat& y) { return *this = *this * y; }
  BigRat& operator/=(const BigRat& y) { return *this = *this / y; }

  friend bool operator==(const BigRat& x, const BigRat& y) { return cmp(x.v_, y.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRat& x, const BigRat& y) {
    return cmp(x.v_, y.v_) <=> 0;
  }

 private:
  explicit BigRat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

/// x = a + b*sqrt(2) with rational a, b.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(const BigRat& a, const BigRat& b = BigRat()) : a_(a), b_(b) {}  // NOLINT
  QSqrt2(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt2(const BigInt& a) : a_(a) {}  // NOLINT(google-explicit-constructor)

  static QSqrt2 sqrt2() { return {BigRat(0), BigRat(1)}; }
  /// (c/2)*sqrt(2) - d, the shape of every jump point of the recurrence.
  static QSqrt2 halfint(const BigInt& c, const BigInt& d);

  const BigRat& a() const { return a_; }
  const BigRat& b() const { return b_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QSqrt2 conjugate() const { return {a_, -b_}; }
  /// a^2 - 2 b^2 = x * conjugate(x).
  BigRat norm() const { return a_ * a_ - BigRat(2) * b_ * b_; }
  QSqrt2 mul_pow2(long e) const { return {a_.mul_pow2(e), b_.mul_pow2(e)}; }

  /// Approximation only; never used for decisions.
  double to_double() const;

  /// Canonical text "a+b*sqrt2" with zero terms omitted, e.g. "3/2",
  /// "-1/2*sqrt2", "1-sqrt2", "-13+19/2*sqrt2".
  std::string to_string() const;

  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y);
  /// Throws DomainError when y == 0.
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y);
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a_, -x.b_}; }
  QSqrt2& operator+=(const QSqrt2& y) { return *this = *this + y; }
  QSqrt2& operator-=(const QSqrt2& y) { return *this = *this - y; }
  QSqrt2& operator*=(const QSqrt2& y) { return *this = *this * y; }
  QSqrt2& operator/=(const QSqrt2& y) { return *this = *this / y; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y);

 private:
  BigRat a_;
  BigRat b_;
};

/// floor(sqrt(n)). Throws DomainError for n < 0.
BigInt isqrt(const BigInt& n);

/// Exact sign of a + b*sqrt(2).
int sign(const QSqrt2& x);

/// Greatest integer <= x, certified by exact sign tests.
BigInt floor_q(const QSqrt2& x);
BigInt ceil_q(const QSqrt2& x);

/// floor(alpha * sqrt(2) * 2^m) for alpha >= 0.
BigInt floor_scaled_sqrt2(const BigInt& alpha, long m);

/// x - floor_q(x), in [0, 1).
QSqrt2 frac_q(const QSqrt2& x);

/// Decimal rendering truncated toward zero to `places` fractional digits,
/// e.g. to_decimal(sqrt2, 7) == "1.4142135".
std::string to_decimal(const QSqrt2& x, int places);
/// Decimal rendering with `digits` significant digits, truncated toward zero.
std::string to_significant(const QSqrt2& x, int digits);

}  // namespace gp
