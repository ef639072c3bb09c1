#pragma once

// Command-line front end. Every subcommand builds a RunReport; `run` parses
// arguments, prints the report (JSON, or CSV for tabular commands) and maps
// the outcome to an exit status.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gp/discovery.hpp"
#include "gp/engine.hpp"

namespace gp::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAnomaly = 2;

/// Significant digits of every decimal rendering in reports.
inline constexpr int kDecimalDigits = 12;

/// A parsed epsilon. Expressions without pi or e are evaluated exactly in
/// Q(sqrt2); anything else goes through the interval engine.
struct EpsilonInput {
  std::string raw;
  std::string canonical;
  std::optional<QSqrt2> exact;
  std::optional<RefinableReal> real;

  /// Throws ParseError with the offending position.
  static EpsilonInput parse(const std::string& text);

  bool is_exact() const { return exact.has_value(); }
  Epsilon value() const;
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<CheckResult> results;
  std::vector<std::string> anomalies;
  /// Remarks that are neither checks nor anomalies.
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool all_pass() const;
  int exit_status() const { return all_pass() && anomalies.empty() ? kExitOk : kExitAnomaly; }
  Json to_json(bool with_timing) const;
};

RunReport cmd_digits(const EpsilonInput& eps, std::size_t count, int max_bits = 4096);

/// `row` empty means all eight rows.
RunReport cmd_verify(std::optional<int> row, std::size_t depth);

RunReport cmd_discover(int row, EndpointSide side, int tol_bits);

RunReport cmd_counterexample(const EpsilonInput& eps, std::size_t limit);
RunReport cmd_corollary(std::size_t max_n, int max_bits);
RunReport cmd_normality(int multiplier, std::size_t k);
RunReport cmd_sweep(const QSqrt2& lo, const QSqrt2& hi, std::size_t depth, std::size_t budget);
RunReport cmd_table(std::size_t depth, std::size_t digit_depth, long l_bound, std::size_t budget);

/// One line of the interval table.
struct Figure1Row {
  int row = 0;
  QSqrt2 xi1;
  QSqrt2 xi2;
  AlgebraicTarget target;
};

/// Header `row,xi1_c,xi1_d,xi2_c,xi2_d,xi1,xi2,alpha,beta,l,t`; decimals to 12
/// places, exact (c, d) forms alongside.
void write_figure1_csv(std::ostream& out);
std::vector<Figure1Row> read_figure1_csv(std::istream& in);

/// Exact steps of v_n over [lo, hi); n = 62 by default.
std::vector<Step> figure2_steps(const QSqrt2& lo, const QSqrt2& hi, std::size_t depth = 62,
                                std::size_t budget = kDefaultCellBudget);
/// Header `lo_c,lo_d,hi_c,hi_d,lo,hi,v`; endpoints are (c/2) sqrt2 - d with
/// rational c, d.
void write_figure2_csv(std::ostream& out, const std::vector<Step>& steps);
std::vector<Step> read_figure2_csv(std::istream& in);

/// Figure 1 (table) or figure 2 (steps of v_62 over [lo, hi)); `samples`
/// evenly spaced rational points are cross-checked by direct generation.
RunReport cmd_plotdata(int figure, const QSqrt2& lo, const QSqrt2& hi, std::size_t samples);

/// Parses `args` (without the program name) and runs the subcommand.
/// Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gp::cli
