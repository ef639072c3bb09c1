#pragma once

// Locating and identifying the jump points of v_n(eps).
//
// v_{n+1} depends on eps only at odd n, through floor(sqrt2 (v_n + eps)),
// which jumps exactly at eps = (m/2) sqrt2 - v_n. Sweeping the domain step by
// step with these breakpoints partitions it exactly into cells on which the
// whole prefix v_1..v_N is constant.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gp/engine.hpp"
#include "gp/exact_arith.hpp"
#include "gp/pair_table.hpp"
#include "gp/precision_reals.hpp"

namespace gp {

struct SweepCell {
  QSqrt2 lo;  // inclusive
  QSqrt2 hi;  // exclusive
  std::vector<BigInt> prefix;  // v_1..v_N on [lo, hi)
};

inline constexpr std::size_t kDefaultCellBudget = 1'000'000;

/// Exact partition of [lo, hi) into maximal cells of constant v_1..v_depth.
/// Requires [lo, hi) inside [1 - sqrt2/2, sqrt2/2) and depth >= 2.
/// Throws BudgetError once the cell count exceeds `cell_budget`.
std::vector<SweepCell> sweep(const QSqrt2& lo, const QSqrt2& hi, std::size_t depth,
                             std::size_t cell_budget = kDefaultCellBudget);

/// A maximal run of constant v_n.
struct Step {
  QSqrt2 lo;
  QSqrt2 hi;
  BigInt value;
};

/// v_n(eps) on [lo, hi) as a step function, from an exact sweep at depth n.
std::vector<Step> step_function(const QSqrt2& lo, const QSqrt2& hi, std::size_t n,
                                std::size_t cell_budget = kDefaultCellBudget);

/// v_n at an exact epsilon.
BigInt value_at(std::size_t n, const QSqrt2& eps);

/// Bisection on exact rational midpoints for inf{eps : v_n(eps) >= target}.
/// Requires v_n(lo) < target <= v_n(hi) (else BracketError). The returned
/// enclosure [lo', hi'] has width <= 2^-tol_bits and the infimum in (lo', hi'].
RealInterval bisect_jump(std::size_t n, const BigInt& target, const BigRat& lo, const BigRat& hi, int tol_bits);

/// The unique (c, d) with |c|, |d| <= bound and (c/2) sqrt2 - d in `x`.
/// Candidates are enumerated exactly in Z[sqrt2] after rescaling by a power of
/// the unit 1 + sqrt2. Throws IdentificationError on zero or several
/// candidates, or when the interval is too wide for the bound.
std::pair<BigInt, BigInt> identify_halfint_sqrt2(const RealInterval& x, const BigInt& bound);

/// a2 x^2 + a1 x + a0 with gcd 1 and positive leading coefficient.
struct QuadPoly {
  BigInt a2;
  BigInt a1;
  BigInt a0;

  QSqrt2 evaluate(const QSqrt2& x) const;
  bool annihilates(const QSqrt2& x) const { return evaluate(x).is_zero(); }
  std::string to_string() const;

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

/// 2x^2 + 4dx + (2d^2 - c^2) divided by its content: the minimal polynomial of
/// (c/2) sqrt2 - d.
QuadPoly halfint_min_poly(const BigInt& c, const BigInt& d);

/// Integer relation among (1, x, x^2) with coefficients bounded by
/// `coeff_bound`, found by LLL reduction. The result has a root inside `x`.
/// Needs roughly width(x) < coeff_bound^-3. Throws IdentificationError when
/// no admissible relation exists at this precision.
QuadPoly min_poly_deg2(const RealInterval& x, const BigInt& coeff_bound);

enum class EndpointSide { Left, Right };

enum class EndpointKind {
  BaseCase,         // set by the base-case condition on v_{2(l+2)}
  InductionDomain,  // boundary of [1 - sqrt2/2, sqrt2/2)
  Direct            // row 5: interval bounds only
};

struct EndpointReport {
  int row = 0;
  EndpointSide side = EndpointSide::Left;
  EndpointKind kind = EndpointKind::BaseCase;
  QSqrt2 xi;
  std::vector<CheckResult> checks;
  /// Breakpoints found by the local sweep over [xi - 2^-60, xi + 2^-60).
  std::vector<QSqrt2> breakpoints;

  bool ok() const;
};

/// Exact confirmation that the row's endpoint is where the base case starts
/// (left) or stops (right) holding, plus a local sweep showing a single jump
/// located exactly at the endpoint.
EndpointReport verify_endpoint(const GPPairEntry& pair, EndpointSide side);

/// Rediscovery of a table endpoint from the recurrence alone: bisection for
/// the jump of v_N (N = 2(l+2) of the row that is sharp there) over the whole
/// domain, then exact identification and a minimal polynomial.
struct EndpointDiscovery {
  int row = 0;
  EndpointSide side = EndpointSide::Left;
  /// Row whose base case fixes the jump (differs from `row` next to row 5).
  int source_row = 0;
  std::size_t depth = 0;
  BigInt target;
  /// Empty for the boundary of the induction domain, which is not a jump.
  std::optional<RealInterval> enclosure;
  BigInt c;
  BigInt d;
  QuadPoly poly;       // from (c, d)
  QuadPoly lll_poly;   // from the enclosure alone
  bool matches_table = false;
  EndpointReport endpoint;
};

/// Throws IdentificationError when tol_bits is too small to separate the
/// candidates or to fix the polynomial; raise tol_bits in that case.
EndpointDiscovery discover_endpoint(int row, EndpointSide side, int tol_bits = 200,
                                    const BigInt& bound = BigInt(1) << 31);

struct PartitionIssue {
  std::string kind;  // "empty", "start", "end", "gap", "overlap"
  QSqrt2 at;
  std::string detail;
};

struct PartitionReport {
  std::vector<PartitionIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Sorted by xi1, each xi2 equal to the next xi1, first xi1 = 1 - sqrt2/2,
/// last xi2 = sqrt2/2.
PartitionReport validate_partition(std::vector<GPPairEntry> entries);

struct DiscoveredRegion {
  QSqrt2 lo;
  QSqrt2 hi;
  std::vector<BigInt> digits;  // d_1..d_D shared by the region
  std::optional<AlgebraicTarget> target;
  std::size_t cells = 0;
};

/// A target with l <= l_bound (alpha + beta = 2^(l+1), or t = sqrt2) whose
/// first digits equal `digits`; smallest l wins.
std::optional<AlgebraicTarget> identify_target(const std::vector<BigInt>& digits, long l_bound);

/// Sweeps the whole domain to `depth`, groups adjacent cells by their first
/// `digit_depth` digits and identifies a target for each group.
/// Requires depth >= 2 * digit_depth + 1.
std::vector<DiscoveredRegion> reconstruct_table(std::size_t depth, std::size_t digit_depth, long l_bound,
                                                std::size_t cell_budget = kDefaultCellBudget);

/// Endpoint x written as (c/2) sqrt2 - d with rational c, d.
std::pair<BigRat, BigRat> halfint_rational_coords(const QSqrt2& x);

/// CSV with header `lo_c,lo_d,hi_c,hi_d,v_prefix`; the prefix is
/// space-separated.
void write_sweep_csv(std::ostream& out, const std::vector<SweepCell>& cells);
std::vector<SweepCell> read_sweep_csv(std::istream& in);

}  // namespace gp
