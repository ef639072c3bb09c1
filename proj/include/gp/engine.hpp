#pragma once

// Graham–Pollak type recurrences
//
//   v_1 = initial,
//   v_{n+1} = floor(sqrt2 * (v_n + eps))   for odd n,
//   v_{n+1} = floor(sqrt2 * (v_n + 1/2))   for even n,
//
// their digit streams d_n = v_{2n+1} - 2 v_{2n-1}, and the checks that tie
// them to the theorem table.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gp/exact_arith.hpp"
#include "gp/pair_table.hpp"
#include "gp/precision_reals.hpp"

namespace gp {

/// Exact parameter in Q(sqrt2) or an interval-evaluated expression.
using Epsilon = std::variant<QSqrt2, RefinableReal>;

std::string to_string(const Epsilon& eps);

struct SequenceSpec {
  Epsilon epsilon = QSqrt2(BigRat(1, 2));
  BigInt initial = 1;
  std::size_t depth = 1;
  /// Refinement cap for interval-valued epsilon.
  int max_bits = 4096;
};

struct SequenceTrace {
  std::vector<BigInt> values;  // values[0] is v_1
  SequenceSpec spec;

  /// 1-based access.
  const BigInt& v(std::size_t n) const { return values.at(n - 1); }
  std::size_t depth() const { return values.size(); }
};

/// Streams v_1, v_2, ... without materializing the trace.
class SequenceStepper {
 public:
  explicit SequenceStepper(SequenceSpec spec);

  std::size_t index() const { return n_; }
  const BigInt& current() const { return v_; }
  /// Computes v_{n+1}. Throws Undecidable carrying n for interval epsilon.
  const BigInt& advance();

 private:
  SequenceSpec spec_;
  std::size_t n_ = 1;
  BigInt v_;
};

/// Throws DomainError for depth < 1 or initial < 1.
SequenceTrace generate(const SequenceSpec& spec);

enum class DigitSource { Trace, Target };

struct DigitStream {
  std::vector<BigInt> digits;  // digits[0] is d_1
  DigitSource source = DigitSource::Trace;

  const BigInt& d(std::size_t n) const { return digits.at(n - 1); }
  std::size_t size() const { return digits.size(); }
};

/// d_1..d_{(N-1)/2} where N is the trace depth.
DigitStream digits_from_trace(const SequenceTrace& trace);
/// d_1..d_count; throws RangeError when the trace is shorter than 2*count+1.
DigitStream digits_from_trace(const SequenceTrace& trace, std::size_t count);

/// d_n = floor(t 2^(n-1)) - 2 floor(t 2^(n-2)) for n = 1..count.
/// Throws DomainError unless 0 <= t < 2.
DigitStream digits_of_target(const QSqrt2& t, std::size_t count);
DigitStream digits_of_target(const AlgebraicTarget& t, std::size_t count);

/// floor(t * 2^m) through integer square roots and shifts.
BigInt floor_target_scaled(const AlgebraicTarget& t, long m);

struct DigitMismatch {
  std::size_t index = 0;
  BigInt actual;
  BigInt expected;
};

struct PairMatchReport {
  int row = 0;
  std::string epsilon;
  /// Known only for exact epsilon.
  std::optional<bool> epsilon_in_interval;
  std::size_t depth = 0;
  std::optional<DigitMismatch> first_mismatch;

  bool matched() const { return !first_mismatch.has_value(); }
};

/// Compares the digits generated with `eps` against the row's target for
/// n = 1..depth. An exact epsilon outside [xi1, xi2) is flagged in the
/// report, not rejected.
PairMatchReport verify_pair(const GPPairEntry& pair, const Epsilon& eps, std::size_t depth);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Margin below/above an endpoint used for sharpness checks: 2^-60.
QSqrt2 sharpness_delta();

struct Certificate {
  int row = 0;
  std::vector<CheckResult> checks;
  /// floor(alpha sqrt2) + 2 alpha, the required value of v_{2(l+2)}.
  BigInt comp_target;

  bool ok() const;
  const CheckResult* first_failure() const;
};

/// Finite exact checks establishing a row (index != 5) for all n:
/// target identities, interval inside the induction domain, the base case at
/// both ends of the interval, endpoint sharpness, the initial odd closed form
/// for 0 <= k <= l+1, and stability of the odd-indexed prefix. An endpoint
/// on the boundary of the induction domain is bounded by the induction-step
/// inequality instead of the base case, and its sharpness is checked there.
/// Throws DomainError for row 5.
Certificate certify_pair(const GPPairEntry& pair);

/// v_{2(l+2)} == floor(alpha sqrt2) + 2 alpha at the given epsilon.
bool base_case_holds(const GPPairEntry& pair, const QSqrt2& eps);

struct FormMismatch {
  long k = 0;
  std::string expected;  // rational, may be non-integral
  BigInt actual;
};

struct FormResult {
  std::string name;  // "odd", "even", "even_printed", "even_shifted"
  bool pass = true;
  std::optional<FormMismatch> first_mismatch;
};

struct ClosedFormReport {
  int row = 0;
  long k_first = 0;
  long k_last = 0;
  std::vector<FormResult> forms;

  const FormResult& form(const std::string& name) const;
};

/// Checks v_{2k} and v_{2k+1} against the closed forms for k in
/// [k_first, k_last]. Rows other than 5 use
///   v_{2k} = floor(t 2^(k-2)) + gamma 2^(k-l-2),  v_{2k+1} = floor(t 2^(k-1)) + 2^k
/// for k >= l+2. Row 5 checks the odd form and two even forms, as printed
/// (floor(t 2^(k-2)) + 2^(k-2)) and shifted by one (floor(t 2^(k-1)) + 2^(k-1)).
ClosedFormReport closed_form_check(int row, const QSqrt2& eps, long k_first, long k_last);

struct LemmaReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::optional<std::string> first_violation;
  std::vector<CheckResult> endpoint_checks;

  bool ok() const;
};

/// {x} - sqrt2 {x/2} + sqrt2/2 for exact x.
QSqrt2 lemma_expression(const QSqrt2& x);
/// (1 - sqrt2) f + sqrt2 eps.
QSqrt2 induction_step_expression(const QSqrt2& f, const QSqrt2& eps);

/// Random exact samples of the fractional-part lemma plus exact checks at the
/// branch endpoints of both inequalities.
LemmaReport lemma_checks(std::size_t sample_count, std::uint64_t seed = 20070101);

struct BadDigit {
  std::size_t index = 0;
  BigInt digit;
};

/// First n <= limit with d_n outside {0, 1}, streaming the trace.
std::optional<BadDigit> first_bad_digit(const QSqrt2& eps, std::size_t limit);

struct CorollaryReport {
  std::size_t max_n = 0;
  /// Bits in the integer part of 759250125 sqrt2.
  std::size_t integer_bits = 0;
  /// 759250125 sqrt2 == 2^29 t_6 + 314491699.
  bool identity_holds = false;
  /// Every 31 <= n <= max_n agrees.
  bool all_agree = false;
  std::optional<DigitMismatch> first_mismatch;
  /// Smallest n0 such that all n0 <= n <= max_n agree.
  std::size_t first_agreement_index = 0;
};

/// Runs w_1 = 1 with eps = 1 - pi^2/e^3 and compares w_{2n+1} - 2 w_{2n-1}
/// against the (n+1)-th binary digit of 759250125 sqrt2, most significant
/// first, for 31 <= n <= max_n.
CorollaryReport corollary_check(std::size_t max_n, int max_bits = 4096);

/// The (position)-th binary digit of alpha*sqrt2, most significant first,
/// counting the integer part.
BigInt msb_digit_of_scaled_sqrt2(const BigInt& alpha, std::size_t position);

struct NormalityReport {
  int multiplier = 1;
  long exponent_offset = 1;
  std::size_t depth = 0;
  QSqrt2 min_frac;
  QSqrt2 max_frac;
  std::size_t argmin = 0;
  std::size_t argmax = 0;
};

/// Exact fractional parts {multiplier sqrt2 2^(k-offset)} for k = 1..depth,
/// offset 1 for multiplier 1 and 2 for multiplier 3. Reports the extremes.
NormalityReport normality_probe(int multiplier, std::size_t depth);
/// The k-th probed value, exposed for tests.
QSqrt2 normality_frac(int multiplier, std::size_t k);

}  // namespace gp
