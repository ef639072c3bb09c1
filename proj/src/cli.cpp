#include "gp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gp/errors.hpp"
#include "gp/expression.hpp"

namespace gp::cli {

// ---------------------------------------------------------------------------
// Inputs and reports

EpsilonInput EpsilonInput::parse(const std::string& text) {
  EpsilonInput in;
  in.raw = text;
  ExprPtr expr = parse_expression(text);
  in.canonical = to_string(*expr);
  in.exact = exact_value(*expr);
  if (!in.exact) in.real = RefinableReal(expr);
  return in;
}

Epsilon EpsilonInput::value() const {
  if (exact) return *exact;
  return *real;
}

bool RunReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
}

Json RunReport::to_json(bool with_timing) const {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  Json rs = Json::array();
  for (const auto& r : results) rs.push_back({{"name", r.name}, {"pass", r.pass}, {"witness", r.witness}});
  j["results"] = rs;
  j["anomalies"] = anomalies;
  j["notes"] = notes;
  j["pass"] = exit_status() == kExitOk;
  if (with_timing) j["timing_ms"] = elapsed_ms;
  return j;
}

namespace {

std::string decimal(const QSqrt2& x) { return to_significant(x, kDecimalDigits); }

Json exact_json(const QSqrt2& x) {
  Json j;
  j["exact"] = x.to_string();
  j["decimal"] = decimal(x);
  auto [c, d] = halfint_rational_coords(x);
  j["c"] = c.to_string();
  j["d"] = d.to_string();
  return j;
}

Json target_json(const AlgebraicTarget& t) {
  return {{"alpha", t.alpha.get_str()}, {"beta", t.beta.get_str()}, {"l", t.l}, {"t", exact_json(t.value())}};
}

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += xs[i].get_str();
  }
  return s;
}

std::string mismatch_witness(const DigitMismatch& m) {
  return "d_" + std::to_string(m.index) + " = " + m.actual.get_str() + ", target digit " + m.expected.get_str();
}

std::string row_name(int row) { return "row" + std::to_string(row); }

// Quoted elsewhere as v_62 at the row-6 left endpoint; compared, never trusted.
const BigInt kPrintedV62("2749487923");

Json printed_v62_comparison(std::vector<std::string>& notes) {
  const GPPairEntry& six = table_row(6);
  const BigInt alpha = six.target.alpha;
  const BigInt computed = floor_scaled_sqrt2(alpha, 0) + 2 * alpha;
  Json j;
  j["printed"] = kPrintedV62.get_str();
  j["computed"] = computed.get_str();
  j["equal"] = computed == kPrintedV62;
  Json rows = Json::array();
  for (const auto& pair : theorem_table()) {
    QSqrt2 mid = (pair.xi1 + pair.xi2) * QSqrt2(BigRat(1, 2));
    if (value_at(62, mid) == kPrintedV62) rows.push_back(pair.index);
  }
  j["printed_value_is_v62_on_rows"] = rows;
  if (computed != kPrintedV62) {
    std::string where = rows.empty() ? "no table row" : "row " + rows.front().dump();
    notes.push_back("suspected erratum: printed v_62 = " + kPrintedV62.get_str() +
                    " but floor(759250125*sqrt2) + 2*759250125 = " + computed.get_str() +
                    "; the printed number is v_62 on " + where);
  }
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// Subcommands

RunReport cmd_digits(const EpsilonInput& eps, std::size_t count, int max_bits) {
  if (count < 1) throw DomainError("digits: --count must be >= 1");
  RunReport r;
  r.command = "digits";
  r.inputs = {{"epsilon", eps.canonical}, {"count", count}};
  if (!eps.is_exact()) r.inputs["max_bits"] = max_bits;

  SequenceSpec spec;
  spec.epsilon = eps.value();
  spec.depth = 2 * count + 1;
  spec.max_bits = max_bits;
  DigitStream ds = digits_from_trace(generate(spec), count);

  r.outputs["epsilon"] = eps.is_exact() ? exact_json(*eps.exact) : Json{{"expression", eps.canonical}};
  r.outputs["digits"] = join(ds.digits);
  r.outputs["last_digit"] = ds.digits.back().get_str();
  std::size_t bad = 0;
  std::string first;
  for (std::size_t n = 1; n <= ds.size(); ++n) {
    const BigInt& d = ds.d(n);
    if (d == 0 || d == 1) continue;
    if (bad++ == 0) first = "d_" + std::to_string(n) + " = " + d.get_str();
    if (bad <= 10) r.anomalies.push_back("non-binary digit d_" + std::to_string(n) + " = " + d.get_str());
  }
  if (bad > 10) r.anomalies.push_back(std::to_string(bad - 10) + " further non-binary digits");
  r.results.push_back({"digits_binary", bad == 0,
                       bad == 0 ? "all " + std::to_string(count) + " digits in {0, 1}" : "first " + first});
  return r;
}

RunReport cmd_verify(std::optional<int> row, std::size_t depth) {
  if (depth < 1) throw DomainError("verify: --depth must be >= 1");
  RunReport r;
  r.command = "verify";
  r.inputs = {{"pair", row ? std::to_string(*row) : "all"}, {"depth", depth}};
  std::vector<int> rows;
  if (row) {
    table_row(*row);
    rows.push_back(*row);
  } else {
    for (int i = 1; i <= 8; ++i) rows.push_back(i);
  }

  Json out_rows = Json::array();
  std::size_t rows_passed = 0;
  for (int i : rows) {
    const GPPairEntry& pair = table_row(i);
    const std::string pre = row_name(i) + ".";
    const std::size_t first_result = r.results.size();
    Json rj;
    rj["row"] = i;
    rj["xi1"] = exact_json(pair.xi1);
    rj["xi2"] = exact_json(pair.xi2);
    rj["target"] = target_json(pair.target);

    const QSqrt2 mid = (pair.xi1 + pair.xi2) * QSqrt2(BigRat(1, 2));
    const std::pair<const char*, QSqrt2> probes[] = {
        {"xi1", pair.xi1}, {"midpoint", mid}, {"xi2_minus_delta", pair.xi2 - sharpness_delta()}};
    for (const auto& [label, eps] : probes) {
      PairMatchReport m = verify_pair(pair, eps, depth);
      std::string witness = m.matched() ? "d_1..d_" + std::to_string(depth) + " equal the target digits"
                                        : mismatch_witness(*m.first_mismatch);
      r.results.push_back({pre + "digits_at_" + label, m.matched(), witness});
    }

    if (pair.direct_case()) {
      ClosedFormReport cf = closed_form_check(i, mid, 1, 50);
      for (const char* name : {"odd", "even_shifted"}) {
        const FormResult& f = cf.form(name);
        std::string witness = f.pass ? "k = 1..50" : "k = " + std::to_string(f.first_mismatch->k) + ": expected " +
                                                         f.first_mismatch->expected + ", got " +
                                                         f.first_mismatch->actual.get_str();
        r.results.push_back({pre + "closed_form_" + name, f.pass, witness});
      }
      const FormResult& printed = cf.form("even_printed");
      if (!printed.pass) {
        r.notes.push_back("row 5: the printed even form floor(t 2^(k-2)) + 2^(k-2) fails from k = " +
                          std::to_string(printed.first_mismatch->k) +
                          "; the form shifted by one index, floor(t 2^(k-1)) + 2^(k-1), holds");
      }
      r.notes.push_back("row 5: eps interval [" + decimal(pair.xi1) + ", " + decimal(pair.xi2) + ")");
    } else {
      Certificate cert = certify_pair(pair);
      for (const auto& c : cert.checks) r.results.push_back({pre + "certificate." + c.name, c.pass, c.witness});
      rj["base_case_index"] = 2 * (pair.target.l + 2);
      rj["base_case_value"] = cert.comp_target.get_str();
    }
    if (i == 6) rj["printed_v62"] = printed_v62_comparison(r.notes);

    bool ok = std::all_of(r.results.begin() + static_cast<std::ptrdiff_t>(first_result), r.results.end(),
                          [](const CheckResult& c) { return c.pass; });
    rj["pass"] = ok;
    if (ok) ++rows_passed;
    out_rows.push_back(rj);
  }
  r.outputs["rows"] = out_rows;
  r.outputs["rows_passed"] = std::to_string(rows_passed) + "/" + std::to_string(rows.size());
  return r;
}

RunReport cmd_discover(int row, EndpointSide side, int tol_bits) {
  RunReport r;
  r.command = "discover";
  const char* side_name = side == EndpointSide::Left ? "left" : "right";
  r.inputs = {{"row", row}, {"side", side_name}, {"tol_bits", tol_bits}};
  EndpointDiscovery d;
  try {
    d = discover_endpoint(row, side, tol_bits);
  } catch (const IdentificationError& e) {
    throw IdentificationError(std::string(e.what()) + " (tol_bits " + std::to_string(tol_bits) +
                              "; raise --tol-bits)");
  }
  const QSqrt2 xi = QSqrt2::halfint(d.c, d.d);
  r.outputs["c"] = d.c.get_str();
  r.outputs["d"] = d.d.get_str();
  r.outputs["endpoint"] = exact_json(xi);
  r.outputs["min_poly"] = d.poly.to_string();
  r.outputs["lll_min_poly"] = d.lll_poly.to_string();
  if (d.enclosure) {
    r.outputs["jump"] = {{"n", d.depth}, {"value", d.target.get_str()}, {"source_row", d.source_row}};
    r.outputs["enclosure"] = {{"lo", decimal(QSqrt2(d.enclosure->lo))},
                              {"hi", decimal(QSqrt2(d.enclosure->hi))},
                              {"width_bits", d.enclosure->bits}};
  } else {
    r.notes.push_back("endpoint is the boundary of the induction domain, not a jump of the sequence");
  }
  r.results.push_back({"matches_table", d.matches_table, "c=" + d.c.get_str() + ", d=" + d.d.get_str()});
  r.results.push_back({"lll_relation_matches", d.lll_poly == d.poly, d.lll_poly.to_string()});
  r.results.push_back({"poly_annihilates", d.poly.annihilates(xi), d.poly.to_string()});
  for (const auto& c : d.endpoint.checks) r.results.push_back({"endpoint." + c.name, c.pass, c.witness});
  return r;
}

RunReport cmd_counterexample(const EpsilonInput& eps, std::size_t limit) {
  if (!eps.is_exact()) throw DomainError("counterexample: epsilon must be exact (no pi or e)");
  RunReport r;
  r.command = "counterexample";
  r.inputs = {{"epsilon", eps.canonical}, {"limit", limit}};
  r.outputs["epsilon"] = exact_json(*eps.exact);
  auto bad = first_bad_digit(*eps.exact, limit);
  if (bad) {
    r.outputs["index"] = bad->index;
    r.outputs["digit"] = bad->digit.get_str();
    r.anomalies.push_back("non-binary digit d_" + std::to_string(bad->index) + " = " + bad->digit.get_str());
  } else {
    r.outputs["index"] = nullptr;
    r.outputs["digit"] = nullptr;
  }
  r.results.push_back({"digits_binary_up_to_limit", !bad,
                       bad ? "d_" + std::to_string(bad->index) + " = " + bad->digit.get_str()
                           : "d_1..d_" + std::to_string(limit) + " in {0, 1}"});
  return r;
}

RunReport cmd_corollary(std::size_t max_n, int max_bits) {
  RunReport r;
  r.command = "corollary";
  r.inputs = {{"max_n", max_n}, {"max_bits", max_bits}, {"epsilon", "1-pi^2/e^3"}};
  CorollaryReport c = corollary_check(max_n, max_bits);
  RealInterval eps = RefinableReal::parse("1-pi^2/e^3").refine(64);
  r.outputs["epsilon_enclosure"] = {{"lo", decimal(QSqrt2(eps.lo))}, {"hi", decimal(QSqrt2(eps.hi))}};
  r.outputs["integer_bits"] = c.integer_bits;
  r.outputs["first_agreement_index"] = c.first_agreement_index;
  r.results.push_back({"identity", c.identity_holds, "759250125*sqrt2 = 2^29*t_6 + 314491699"});
  r.results.push_back({"digits_agree", c.all_agree,
                       c.all_agree ? "31 <= n <= " + std::to_string(max_n) : mismatch_witness(*c.first_mismatch)});
  r.notes.push_back("759250125*sqrt2 has " + std::to_string(c.integer_bits) + " integer bits");
  return r;
}

RunReport cmd_normality(int multiplier, std::size_t k) {
  RunReport r;
  r.command = "normality";
  r.inputs = {{"multiplier", multiplier}, {"k", k}};
  NormalityReport p = normality_probe(multiplier, k);
  r.outputs["exponent_offset"] = p.exponent_offset;
  r.outputs["min"] = exact_json(p.min_frac);
  r.outputs["argmin"] = p.argmin;
  r.outputs["max"] = exact_json(p.max_frac);
  r.outputs["argmax"] = p.argmax;
  bool inside = sign(p.min_frac) > 0 && p.max_frac < QSqrt2(1);
  r.results.push_back({"fracs_in_open_unit_interval", inside,
                       "min at k=" + std::to_string(p.argmin) + ", max at k=" + std::to_string(p.argmax)});
  return r;
}

RunReport cmd_sweep(const QSqrt2& lo, const QSqrt2& hi, std::size_t depth, std::size_t budget) {
  RunReport r;
  r.command = "sweep";
  r.inputs = {{"lo", lo.to_string()}, {"hi", hi.to_string()}, {"depth", depth}, {"budget", budget}};
  auto cells = sweep(lo, hi, depth, budget);
  Json cj = Json::array();
  for (const auto& cell : cells) {
    cj.push_back({{"lo", exact_json(cell.lo)},
                  {"hi", exact_json(cell.hi)},
                  {"v_last", cell.prefix.back().get_str()},
                  {"prefix", join(cell.prefix)}});
  }
  r.outputs["cell_count"] = cells.size();
  r.outputs["cells"] = cj;
  bool tiles = cells.front().lo == lo && cells.back().hi == hi;
  bool maximal = true;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    tiles = tiles && cells[i].hi == cells[i + 1].lo;
    maximal = maximal && cells[i].prefix != cells[i + 1].prefix;
  }
  r.results.push_back({"cells_tile_domain", tiles, std::to_string(cells.size()) + " cells"});
  r.results.push_back({"adjacent_prefixes_differ", maximal, "depth " + std::to_string(depth)});
  return r;
}

RunReport cmd_table(std::size_t depth, std::size_t digit_depth, long l_bound, std::size_t budget) {
  RunReport r;
  r.command = "table";
  r.inputs = {{"depth", depth}, {"digit_depth", digit_depth}, {"l_bound", l_bound}, {"budget", budget}};
  auto regions = reconstruct_table(depth, digit_depth, l_bound, budget);
  Json rj = Json::array();
  std::size_t consistent = 0, identified = 0;
  for (const auto& reg : regions) {
    Json j;
    j["lo"] = exact_json(reg.lo);
    j["hi"] = exact_json(reg.hi);
    j["cells"] = reg.cells;
    j["digits"] = join(reg.digits);
    j["target"] = reg.target ? target_json(*reg.target) : Json(nullptr);
    Json row = nullptr;
    for (const auto& pair : theorem_table()) {
      if (reg.target && pair.target == *reg.target && pair.xi1 == reg.lo && pair.xi2 == reg.hi) row = pair.index;
    }
    j["table_row"] = row;
    if (reg.target) {
      ++identified;
      if (digits_of_target(*reg.target, digit_depth).digits == reg.digits) ++consistent;
    } else {
      r.notes.push_back("unidentified region [" + decimal(reg.lo) + ", " + decimal(reg.hi) + ") with l <= " +
                        std::to_string(l_bound));
    }
    rj.push_back(j);
  }
  r.outputs["regions"] = rj;
  r.results.push_back({"target_digits_match_region", consistent == identified,
                       std::to_string(consistent) + "/" + std::to_string(identified) + " identified regions"});
  return r;
}

// ---------------------------------------------------------------------------
// Plot data

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  return fields;
}

QSqrt2 from_coords(const std::string& c, const std::string& d) {
  return QSqrt2(-BigRat::parse(d), BigRat::parse(c) / BigRat(2));
}

void write_coords(std::ostream& out, const QSqrt2& x) {
  auto [c, d] = halfint_rational_coords(x);
  out << c.to_string() << ',' << d.to_string();
}

constexpr const char* kFigure1Header = "row,xi1_c,xi1_d,xi2_c,xi2_d,xi1,xi2,alpha,beta,l,t";
constexpr const char* kFigure2Header = "lo_c,lo_d,hi_c,hi_d,lo,hi,v";

}  // namespace

void write_figure1_csv(std::ostream& out) {
  out << kFigure1Header << '\n';
  for (const auto& pair : theorem_table()) {
    out << pair.index << ',';
    write_coords(out, pair.xi1);
    out << ',';
    write_coords(out, pair.xi2);
    out << ',' << to_decimal(pair.xi1, 12) << ',' << to_decimal(pair.xi2, 12) << ',' << pair.target.alpha.get_str()
        << ',' << pair.target.beta.get_str() << ',' << pair.target.l << ',' << to_decimal(pair.target.value(), 12)
        << '\n';
  }
}

std::vector<Figure1Row> read_figure1_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kFigure1Header) throw ParseError("missing figure 1 CSV header", 0);
  std::vector<Figure1Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 11) throw ParseError("expected 11 CSV fields", 0);
    rows.push_back({std::stoi(f[0]), from_coords(f[1], f[2]), from_coords(f[3], f[4]),
                    AlgebraicTarget{BigInt(f[7]), BigInt(f[8]), std::stol(f[9])}});
  }
  return rows;
}

std::vector<Step> figure2_steps(const QSqrt2& lo, const QSqrt2& hi, std::size_t depth, std::size_t budget) {
  return step_function(lo, hi, depth, budget);
}

void write_figure2_csv(std::ostream& out, const std::vector<Step>& steps) {
  out << kFigure2Header << '\n';
  for (const auto& s : steps) {
    write_coords(out, s.lo);
    out << ',';
    write_coords(out, s.hi);
    out << ',' << decimal(s.lo) << ',' << decimal(s.hi) << ',' << s.value.get_str() << '\n';
  }
}

std::vector<Step> read_figure2_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kFigure2Header) throw ParseError("missing figure 2 CSV header", 0);
  std::vector<Step> steps;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 7) throw ParseError("expected 7 CSV fields", 0);
    steps.push_back({from_coords(f[0], f[1]), from_coords(f[2], f[3]), BigInt(f[6])});
  }
  return steps;
}

RunReport cmd_plotdata(int figure, const QSqrt2& lo, const QSqrt2& hi, std::size_t samples) {
  RunReport r;
  r.command = "plotdata";
  r.inputs = {{"figure", figure}};
  if (figure == 1) {
    Json rows = Json::array();
    for (const auto& pair : theorem_table()) {
      Json j;
      j["row"] = pair.index;
      j["xi1"] = exact_json(pair.xi1);
      j["xi2"] = exact_json(pair.xi2);
      j["target"] = target_json(pair.target);
      rows.push_back(j);
    }
    r.outputs["rows"] = rows;
    PartitionReport pr = validate_partition(theorem_table());
    r.results.push_back({"partition_valid", pr.ok(), pr.ok() ? "8 rows tile the domain" : pr.issues.front().detail});
    return r;
  }
  if (figure != 2) throw DomainError("plotdata: --figure must be 1 or 2");

  const std::size_t n = 62;
  r.inputs["range"] = lo.to_string() + ":" + hi.to_string();
  r.inputs["samples"] = samples;
  auto steps = figure2_steps(lo, hi, n);
  Json sj = Json::array();
  for (const auto& s : steps) {
    sj.push_back({{"lo", exact_json(s.lo)}, {"hi", exact_json(s.hi)}, {"v", s.value.get_str()}});
  }
  r.outputs["n"] = n;
  r.outputs["steps"] = sj;

  const QSqrt2& xi = table_row(6).xi1;
  if (lo < xi && xi < hi) {
    auto it = std::find_if(steps.begin() + 1, steps.end(), [&](const Step& s) { return s.lo == xi; });
    r.results.push_back({"jump_at_row6_xi1", it != steps.end(),
                         it != steps.end() ? "jump " + (it - 1)->value.get_str() + " -> " + it->value.get_str() +
                                                 " at " + xi.to_string()
                                           : "no jump at " + xi.to_string()});
    r.outputs["printed_v62"] = printed_v62_comparison(r.notes);
  }

  if (samples > 0) {
    std::size_t agree = 0;
    std::string first_bad;
    for (std::size_t j = 0; j < samples; ++j) {
      QSqrt2 eps = lo + (hi - lo) * QSqrt2(BigRat(BigInt(2 * j + 1), BigInt(2 * samples)));
      auto it = std::find_if(steps.begin(), steps.end(), [&](const Step& s) { return s.lo <= eps && eps < s.hi; });
      if (it != steps.end() && value_at(n, eps) == it->value) {
        ++agree;
      } else if (first_bad.empty()) {
        first_bad = "eps=" + eps.to_string();
      }
    }
    r.results.push_back({"samples_agree", agree == samples,
                         first_bad.empty() ? std::to_string(samples) + " direct evaluations" : first_bad});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Argument handling

namespace {

QSqrt2 parse_exact(const std::string& text, const char* what) {
  EpsilonInput in = EpsilonInput::parse(text);
  if (!in.is_exact()) throw DomainError(std::string(what) + " must be exact (no pi or e)");
  return *in.exact;
}

std::pair<QSqrt2, QSqrt2> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("range must be lo:hi", 0);
  return {parse_exact(text.substr(0, colon), "range"), parse_exact(text.substr(colon + 1), "range")};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graham-Pollak pairs: digits, certificates and endpoint discovery"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false;
  bool csv = false;
  std::string out_file;
  app.add_flag("--no-timing", no_timing, "Omit timing from the JSON report");
  app.add_flag("--csv", csv, "Emit CSV instead of JSON for tabular commands");
  app.add_option("--out", out_file, "Write CSV to this file (plotdata, sweep)");

  std::string eps_text = "1/2";
  std::size_t count = 9;
  int max_bits = 4096;
  auto* digits = app.add_subcommand("digits", "Digits d_1..d_N of the sequence");
  digits->add_option("--epsilon", eps_text, "Epsilon expression")->capture_default_str();
  digits->add_option("--count", count, "Number of digits")->capture_default_str();
  digits->add_option("--max-bits", max_bits, "Refinement cap for pi/e expressions")->capture_default_str();

  std::string pair_text = "all";
  std::size_t depth = 200;
  auto* verify = app.add_subcommand("verify", "Verify and certify table rows");
  verify->add_option("--pair", pair_text, "Row 1..8 or all")->capture_default_str();
  verify->add_option("--depth", depth, "Digits compared")->capture_default_str();

  int row = 6;
  std::string side_text = "left";
  int tol_bits = 200;
  auto* discover = app.add_subcommand("discover", "Rediscover a row endpoint by bisection");
  discover->add_option("--row", row, "Row 1..8")->capture_default_str();
  discover->add_option("--side", side_text, "left or right")->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  discover->add_option("--tol-bits", tol_bits, "Bisection width 2^-tolBits")->capture_default_str();

  int figure = 1;
  std::string range_text = "0.40:0.60";
  std::size_t samples = 64;
  auto* plot = app.add_subcommand("plotdata", "Data behind the interval table and the v_62 step plot");
  plot->add_option("--figure", figure, "1 or 2")->capture_default_str();
  plot->add_option("--range", range_text, "lo:hi for figure 2")->capture_default_str();
  plot->add_option("--samples", samples, "Direct evaluations cross-checked against the steps")
      ->capture_default_str();

  std::string ce_text = "0.2928";
  std::size_t limit = 10000;
  auto* counter = app.add_subcommand("counterexample", "First digit outside {0, 1}");
  counter->add_option("--epsilon", ce_text, "Exact epsilon")->capture_default_str();
  counter->add_option("--limit", limit, "Largest digit index searched")->capture_default_str();

  std::size_t max_n = 150;
  int cor_bits = 4096;
  auto* corollary = app.add_subcommand("corollary", "Digits of 759250125*sqrt2 from eps = 1 - pi^2/e^3");
  corollary->add_option("--max-n", max_n, "Largest n compared")->capture_default_str();
  corollary->add_option("--max-bits", cor_bits, "Refinement cap")->capture_default_str();

  int multiplier = 1;
  std::size_t k = 1000;
  auto* normality = app.add_subcommand("normality", "Extremes of {m sqrt2 2^(k-offset)}");
  normality->add_option("--multiplier", multiplier, "1 or 3")->capture_default_str();
  normality->add_option("--k", k, "Number of exponents")->capture_default_str();

  std::string lo_text = "1-1/2*sqrt2", hi_text = "1/2*sqrt2";
  std::size_t sweep_depth = 21;
  std::size_t budget = kDefaultCellBudget;
  auto* sweep_cmd = app.add_subcommand("sweep", "Exact cells of constant v_1..v_N");
  sweep_cmd->add_option("--lo", lo_text, "Domain start")->capture_default_str();
  sweep_cmd->add_option("--hi", hi_text, "Domain end (exclusive)")->capture_default_str();
  sweep_cmd->add_option("--depth", sweep_depth, "N")->capture_default_str();
  sweep_cmd->add_option("--budget", budget, "Cell budget")->capture_default_str();

  std::size_t table_depth = 21, digit_depth = 10;
  long l_bound = 4;
  auto* table = app.add_subcommand("table", "Reconstruct the pair table from a full sweep");
  table->add_option("--depth", table_depth, "Sweep depth N")->capture_default_str();
  table->add_option("--digit-depth", digit_depth, "Digits D matched")->capture_default_str();
  table->add_option("--l-bound", l_bound, "Largest l searched")->capture_default_str();
  table->add_option("--budget", budget, "Cell budget")->capture_default_str();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    auto start = std::chrono::steady_clock::now();
    RunReport report;
    std::optional<std::string> csv_text;
    if (*digits) {
      report = cmd_digits(EpsilonInput::parse(eps_text), count, max_bits);
    } else if (*verify) {
      std::optional<int> which;
      if (pair_text != "all") which = std::stoi(pair_text);
      report = cmd_verify(which, depth);
    } else if (*discover) {
      report = cmd_discover(row, side_text == "left" ? EndpointSide::Left : EndpointSide::Right, tol_bits);
    } else if (*plot) {
      auto [lo, hi] = parse_range(range_text);
      report = cmd_plotdata(figure, lo, hi, samples);
      std::ostringstream s;
      if (figure == 1) {
        write_figure1_csv(s);
      } else {
        write_figure2_csv(s, figure2_steps(lo, hi));
      }
      csv_text = s.str();
    } else if (*counter) {
      report = cmd_counterexample(EpsilonInput::parse(ce_text), limit);
    } else if (*corollary) {
      report = cmd_corollary(max_n, cor_bits);
    } else if (*normality) {
      report = cmd_normality(multiplier, k);
    } else if (*sweep_cmd) {
      QSqrt2 lo = parse_exact(lo_text, "--lo"), hi = parse_exact(hi_text, "--hi");
      report = cmd_sweep(lo, hi, sweep_depth, budget);
      std::ostringstream s;
      write_sweep_csv(s, sweep(lo, hi, sweep_depth, budget));
      csv_text = s.str();
    } else if (*table) {
      report = cmd_table(table_depth, digit_depth, l_bound, budget);
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (csv_text && !out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) throw DomainError("cannot write " + out_file);
      f << *csv_text;
    }
    if (csv && csv_text) {
      out << *csv_text;
    } else {
      out << report.to_json(!no_timing).dump(2) << '\n';
    }
    return report.exit_status();
  } catch (const Undecidable& e) {
    err << "error: " << e.what() << "; raise --max-bits\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace gp::cli
