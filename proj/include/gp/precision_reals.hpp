#pragma once

// Rigorous interval enclosures with exact rational endpoints. No floating
// point participates in any bound.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "gp/exact_arith.hpp"
#include "gp/expression.hpp"

namespace gp {

struct RealInterval {
  BigRat lo;
  BigRat hi;
  int bits = 0;  // precision this enclosure was requested at

  BigRat width() const { return hi - lo; }
  BigRat midpoint() const { return (lo + hi) / BigRat(2); }
  bool contains(const BigRat& x) const { return lo <= x && x <= hi; }
  bool contains(const QSqrt2& x) const { return QSqrt2(lo) <= x && x <= QSqrt2(hi); }
  /// `inner` is a subset of this interval.
  bool encloses(const RealInterval& inner) const { return lo <= inner.lo && inner.hi <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  /// min |x| over the interval.
  BigRat magnitude_lower() const;
  std::string to_string() const;
};

/// Enclosure of pi with width <= 2^(1-bits), from Machin's formula
/// pi = 16 atan(1/5) - 4 atan(1/239). Requests at higher precision are
/// contained in requests at lower precision.
RealInterval const_pi(int bits);

/// Enclosure of e from sum 1/k!, same width and nesting contract as const_pi.
RealInterval const_e(int bits);

/// Enclosure of sqrt(2) of width 2^-bits.
RealInterval const_sqrt2(int bits);

/// Sound interval evaluation of `expr` whose width is at most
/// 2^(1-bits) * max(1, |value|). Working precision grows until the width
/// contract holds; throws EvaluationError when a divisor interval still
/// contains zero at the internal cap.
RealInterval eval_expr(const Expr& expr, int bits);

/// An expression together with a monotonically refined enclosure.
/// Copies share the cache; refinement is internally synchronized.
class RefinableReal {
 public:
  explicit RefinableReal(ExprPtr expr);
  /// Parses with the expression grammar.
  static RefinableReal parse(std::string_view text);
  /// Wraps an exact value as an expression (used to route exact inputs
  /// through the interval path for cross-checks).
  static RefinableReal from_exact(const QSqrt2& x);

  const Expr& expression() const { return *expr_; }
  const ExprPtr& expression_ptr() const { return expr_; }
  std::string to_string() const { return gp::to_string(*expr_); }

  /// Enclosure meeting the eval_expr width contract for `bits`. Successive
  /// results are nested: each is a subset of every earlier one.
  RealInterval refine(int bits) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<RealInterval> interval;
  };
  ExprPtr expr_;
  std::shared_ptr<Cache> cache_;
};

/// floor(sqrt2 * (addend + offset + x)), decided from enclosures of x at
/// 64, 128, ... bits. Throws Undecidable(max_bits) when the enclosure still
/// straddles an integer at max_bits.
BigInt certified_floor(const RefinableReal& x, const QSqrt2& offset, const BigInt& addend,
                       int max_bits = 4096);

}  // namespace gp
