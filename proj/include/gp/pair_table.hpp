#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gp/exact_arith.hpp"

namespace gp {

/// t = (alpha*sqrt2 - beta) / 2^l. Row 5 (t = sqrt2) is alpha=1, beta=0, l=0.
struct AlgebraicTarget {
  BigInt alpha;
  BigInt beta;
  long l = 0;

  BigInt gamma() const { return 2 * alpha + beta; }
  QSqrt2 value() const { return QSqrt2(BigRat(BigInt(-beta)), BigRat(alpha)).mul_pow2(-l); }
  bool alpha_odd() const { return mpz_odd_p(alpha.get_mpz_t()) != 0; }
  /// alpha + beta == 2^(l+1).
  bool power_identity_holds() const { return alpha + beta == pow2(static_cast<std::size_t>(l + 1)); }

  friend bool operator==(const AlgebraicTarget&, const AlgebraicTarget&) = default;
};

/// One row of the theorem table: epsilon in [xi1, xi2) yields the digits of t.
struct GPPairEntry {
  int index = 0;
  QSqrt2 xi1;
  QSqrt2 xi2;
  AlgebraicTarget target;

  /// Row 5 is proved through closed forms valid from k = 1 and has no
  /// base-case condition.
  bool direct_case() const { return index == 5; }
};

/// [1 - sqrt2/2, sqrt2/2): the epsilon range on which the induction step holds.
QSqrt2 domain_lo();
QSqrt2 domain_hi();

/// The eight rows, ordered by index.
const std::vector<GPPairEntry>& theorem_table();
const GPPairEntry& table_row(int index);

/// (c, d) with x = (c/2) sqrt2 - d, when c and d are integers.
std::optional<std::pair<BigInt, BigInt>> halfint_coords(const QSqrt2& x);

}  // namespace gp
