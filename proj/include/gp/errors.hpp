#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gp {

/// Input outside an operation's mathematical domain (negative isqrt argument,
/// division by zero, target outside [0,2), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A requested index or depth exceeds what the data supports.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Interval evaluation failed (divisor interval still contains zero after
/// reaching the refinement cap).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified floor could not be decided within the precision budget.
/// Either the budget is too small or the value is an exact integer.
class Undecidable : public std::runtime_error {
 public:
  explicit Undecidable(int max_bits, std::size_t index = 0)
      : std::runtime_error(message(max_bits, index)), max_bits_(max_bits), index_(index) {}

  int max_bits() const noexcept { return max_bits_; }
  /// Sequence index n whose successor v_{n+1} could not be decided; 0 if the
  /// floor was requested outside a sequence.
  std::size_t index() const noexcept { return index_; }

  Undecidable with_index(std::size_t index) const { return Undecidable(max_bits_, index); }

 private:
  static std::string message(int max_bits, std::size_t index) {
    std::string m = "floor undecidable at " + std::to_string(max_bits) + " bits";
    if (index != 0) m += " (step n=" + std::to_string(index) + ")";
    return m;
  }
  int max_bits_;
  std::size_t index_;
};

/// Sweep exceeded its cell budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::size_t budget, std::size_t depth_reached)
      : std::runtime_error("sweep cell budget " + std::to_string(budget) +
                           " exceeded at depth " + std::to_string(depth_reached) +
                           "; narrow the domain"),
        depth_reached_(depth_reached) {}
  std::size_t depth_reached() const noexcept { return depth_reached_; }

 private:
  std::size_t depth_reached_;
};

/// Bisection precondition v_n(lo) < target <= v_n(hi) failed.
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Algebraic identification found zero or several candidates.
class IdentificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gp
