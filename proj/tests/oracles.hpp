#pragma once

// Reference computations that share no code with the library: MPFR with
// directed rounding, turned into exact rational bounds.

#include <mpfr.h>

#include <random>
#include <utility>
#include <vector>

#include "gp/exact_arith.hpp"

namespace oracle {

using gp::BigInt;
using gp::BigRat;
using gp::QSqrt2;

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~Mpfr() { mpfr_clear(x_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

inline BigRat to_rat(mpfr_srcptr x) {
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  return BigRat(BigInt(m)).mul_pow2(e);
}

/// Rational bounds on sqrt2 from MPFR at `prec` bits.
inline std::pair<BigRat, BigRat> sqrt2_bounds(mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_sqrt_ui(lo.get(), 2, MPFR_RNDD);
  mpfr_sqrt_ui(hi.get(), 2, MPFR_RNDU);
  return {to_rat(lo.get()), to_rat(hi.get())};
}

inline std::pair<BigRat, BigRat> pi_bounds(mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return {to_rat(lo.get()), to_rat(hi.get())};
}

inline std::pair<BigRat, BigRat> e_bounds(mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_ui(lo.get(), 1, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 1, MPFR_RNDN);
  mpfr_exp(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
  return {to_rat(lo.get()), to_rat(hi.get())};
}

/// Bounds on 1 - pi^2/e^3 from MPFR enclosures of pi and e.
inline std::pair<BigRat, BigRat> corollary_eps_bounds(mpfr_prec_t prec) {
  auto [pl, ph] = pi_bounds(prec);
  auto [el, eh] = e_bounds(prec);
  BigRat lo = BigRat(1) - ph * ph / (el * el * el);
  BigRat hi = BigRat(1) - pl * pl / (eh * eh * eh);
  return {lo, hi};
}

/// floor(a + b sqrt2) from successively tighter MPFR bounds on sqrt2.
inline BigInt floor_qsqrt2(const QSqrt2& x) {
  if (x.b().is_zero()) return x.a().floor();
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    auto [s_lo, s_hi] = sqrt2_bounds(prec);
    BigRat p = x.a() + x.b() * s_lo;
    BigRat q = x.a() + x.b() * s_hi;
    if (p.floor() == q.floor()) return p.floor();
  }
}

/// v_1..v_depth with every floor taken by the oracle.
inline std::vector<BigInt> trace(const QSqrt2& eps, std::size_t depth, const BigInt& initial = 1) {
  std::vector<BigInt> v{initial};
  const QSqrt2 r2 = QSqrt2::sqrt2();
  for (std::size_t n = 1; n < depth; ++n) {
    QSqrt2 add = n % 2 == 1 ? eps : QSqrt2(BigRat(1, 2));
    v.push_back(floor_qsqrt2(r2 * (QSqrt2(v.back()) + add)));
  }
  return v;
}

/// d_n = floor(t 2^(n-1)) - 2 floor(t 2^(n-2)) for n = 1..count.
inline std::vector<BigInt> target_digits(const QSqrt2& t, std::size_t count) {
  std::vector<BigInt> d;
  for (std::size_t n = 1; n <= count; ++n) {
    long e = static_cast<long>(n);
    d.push_back(floor_qsqrt2(t.mul_pow2(e - 1)) - 2 * floor_qsqrt2(t.mul_pow2(e - 2)));
  }
  return d;
}

inline BigInt random_bigint(std::mt19937_64& rng, unsigned max_bits) {
  unsigned bits = 1 + static_cast<unsigned>(rng() % max_bits);
  BigInt r = 0;
  for (unsigned i = 0; i < bits; i += 64) {
    r <<= 64;
    r += BigInt(std::to_string(rng()));
  }
  return r >> (((bits + 63) / 64) * 64 - bits);
}

inline BigInt random_signed(std::mt19937_64& rng, unsigned max_bits) {
  BigInt r = random_bigint(rng, max_bits);
  return rng() % 2 ? BigInt(-r) : r;
}

inline BigRat random_rat(std::mt19937_64& rng, unsigned num_bits, unsigned den_bits) {
  BigInt den = random_bigint(rng, den_bits) + 1;
  return BigRat(random_signed(rng, num_bits), den);
}

inline QSqrt2 random_qsqrt2(std::mt19937_64& rng, unsigned num_bits, unsigned den_bits) {
  return QSqrt2(random_rat(rng, num_bits, den_bits), random_rat(rng, num_bits, den_bits));
}

/// Uniform-ish rational in [lo, hi) with denominator 2^bits.
inline BigRat random_in(std::mt19937_64& rng, const BigRat& lo, const BigRat& hi, unsigned bits = 48) {
  BigInt k = random_bigint(rng, bits) % (BigInt(1) << bits);
  return lo + (hi - lo) * BigRat(k, BigInt(1) << bits);
}

}  // namespace oracle
