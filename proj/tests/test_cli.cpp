#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gp/cli.hpp"
#include "gp/errors.hpp"

using namespace gp;
using namespace gp::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

bool has_note(const Json& j, const std::string& needle) {
  for (const auto& n : j["notes"]) {
    if (n.get<std::string>().find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("epsilon inputs") {
  EpsilonInput a = EpsilonInput::parse("0.2928");
  REQUIRE(a.is_exact());
  CHECK(*a.exact == QSqrt2(BigRat(2928, 10000)));
  EpsilonInput b = EpsilonInput::parse("(1+sqrt2)/2");
  REQUIRE(b.is_exact());
  CHECK(*b.exact == QSqrt2(BigRat(1, 2), BigRat(1, 2)));
  EpsilonInput c = EpsilonInput::parse("1-pi^2/e^3");
  CHECK_FALSE(c.is_exact());
  CHECK(std::holds_alternative<RefinableReal>(c.value()));
  CHECK_THROWS_AS(EpsilonInput::parse("1-pi^"), ParseError);
}

TEST_CASE("canonical epsilon text reparses to an equal value") {
  for (const char* text : {"0.2928", "(309/2)*sqrt2-218", "1 - sqrt2/2", "-(1+sqrt2)^3/7", "1-pi^2/e^3",
                           "2^-3*pi", "(1296121037/2)*sqrt2 - 916495974"}) {
    EpsilonInput in = EpsilonInput::parse(text);
    EpsilonInput back = EpsilonInput::parse(in.canonical);
    CHECK(back.canonical == in.canonical);
    CHECK(back.exact == in.exact);
  }
}

TEST_CASE("digits command") {
  Outcome o = invoke({"digits", "--epsilon", "1/2", "--count", "9", "--no-timing"});
  CHECK(o.status == kExitOk);
  CHECK(o.json()["outputs"]["digits"] == "1 0 1 1 0 1 0 1 0");
  CHECK(o.json()["command"] == "digits");
  CHECK(o.json()["version"] == kVersion);
}

TEST_CASE("digits command with the corollary epsilon matches t_6") {
  Outcome o = invoke({"digits", "--epsilon", "1-pi^2/e^3", "--count", "40", "--no-timing"});
  CHECK(o.status == kExitOk);
  std::string expected;
  for (const auto& d : digits_of_target(table_row(6).target, 40).digits) {
    expected += (expected.empty() ? "" : " ") + d.get_str();
  }
  CHECK(o.json()["outputs"]["digits"] == expected);
}

TEST_CASE("digits command reports a bad digit as an anomaly") {
  Outcome o = invoke({"digits", "--epsilon", "0.2928", "--count", "3067", "--no-timing"});
  CHECK(o.status == kExitAnomaly);
  Json j = o.json();
  CHECK(j["outputs"]["last_digit"] == "-1");
  CHECK(j["anomalies"][0] == "non-binary digit d_3067 = -1");
}

TEST_CASE("errors exit with status 1") {
  Outcome parse = invoke({"digits", "--epsilon", "1+*2"});
  CHECK(parse.status == kExitError);
  CHECK(parse.err.find("position 2") != std::string::npos);
  CHECK(invoke({"bogus"}).status == kExitError);
  CHECK(invoke({}).status == kExitError);
  CHECK(invoke({"verify", "--pair", "9"}).status == kExitError);
  CHECK(invoke({"counterexample", "--epsilon", "pi/10"}).status == kExitError);
  Outcome undecidable = invoke({"digits", "--epsilon", "sqrt2/2-1+pi-pi", "--count", "2", "--max-bits", "128"});
  CHECK(undecidable.status == kExitError);
  CHECK(undecidable.err.find("n=1") != std::string::npos);
  CHECK(invoke({"sweep", "--depth", "41", "--budget", "3"}).status == kExitError);
}

TEST_CASE("verify all rows") {
  Outcome o = invoke({"verify", "--pair", "all", "--depth", "200", "--no-timing"});
  CHECK(o.status == kExitOk);
  Json j = o.json();
  CHECK(j["outputs"]["rows_passed"] == "8/8");
  CHECK(has_note(j, "suspected erratum"));
}

TEST_CASE("verify row 5 notes its interval") {
  Outcome o = invoke({"verify", "--pair", "5", "--depth", "100", "--no-timing"});
  CHECK(o.status == kExitOk);
  Json j = o.json();
  CHECK(has_note(j, "[0.4959953"));
  CHECK(has_note(j, ", 0.5012400"));
}

TEST_CASE("verify row 6 records v_62") {
  Outcome o = invoke({"verify", "--pair", "6", "--depth", "100", "--no-timing"});
  CHECK(o.status == kExitOk);
  Json row = o.json()["outputs"]["rows"][0];
  CHECK(row["base_case_index"] == 62);
  CHECK(row["base_case_value"] == "2592242074");
  CHECK(row["printed_v62"]["equal"] == false);
  CHECK(row["printed_v62"]["printed_value_is_v62_on_rows"] == Json::array({8}));
}

TEST_CASE("discover rows 6, 2 and 8") {
  const std::tuple<const char*, const char*, const char*> cases[] = {
      {"6", "1296121037", "916495974"}, {"2", "2", "1"}, {"8", "5", "3"}};
  for (const auto& [row, c, d] : cases) {
    Outcome o = invoke({"discover", "--row", row, "--no-timing"});
    CHECK(o.status == kExitOk);
    CHECK(o.json()["outputs"]["c"] == c);
    CHECK(o.json()["outputs"]["d"] == d);
  }
  Outcome low = invoke({"discover", "--row", "6", "--tol-bits", "8"});
  CHECK(low.status == kExitError);
  CHECK(low.err.find("raise --tol-bits") != std::string::npos);
}

TEST_CASE("plotdata figure 1 round trips through CSV") {
  Outcome o = invoke({"plotdata", "--figure", "1", "--csv"});
  CHECK(o.status == kExitOk);
  std::istringstream in(o.out);
  auto rows = read_figure1_csv(in);
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rows[i].row == theorem_table()[i].index);
    CHECK(rows[i].xi1 == theorem_table()[i].xi1);
    CHECK(rows[i].xi2 == theorem_table()[i].xi2);
    CHECK(rows[i].target == theorem_table()[i].target);
  }
  CHECK(o.out.find("0.501240067776") != std::string::npos);
}

TEST_CASE("plotdata figure 2") {
  Outcome o = invoke({"plotdata", "--figure", "2", "--range", "0.40:0.60", "--no-timing"});
  CHECK(o.status == kExitOk);
  Json j = o.json();
  bool found = false;
  for (const auto& s : j["outputs"]["steps"]) {
    if (s["lo"]["c"] == "1296121037" && s["lo"]["d"] == "916495974") {
      found = true;
      CHECK(s["lo"]["decimal"].get<std::string>().rfind("0.5012400", 0) == 0);
    }
  }
  CHECK(found);

  const std::string path = "plotdata_figure2_test.csv";
  Outcome f = invoke({"plotdata", "--figure", "2", "--out", path, "--no-timing"});
  CHECK(f.status == kExitOk);
  std::ifstream in(path);
  auto steps = read_figure2_csv(in);
  auto expected = figure2_steps(QSqrt2(BigRat(40, 100)), QSqrt2(BigRat(60, 100)));
  REQUIRE(steps.size() == expected.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    CHECK(steps[i].lo == expected[i].lo);
    CHECK(steps[i].hi == expected[i].hi);
    CHECK(steps[i].value == expected[i].value);
  }
  std::remove(path.c_str());
}

TEST_CASE("misc subcommands") {
  Outcome ce = invoke({"counterexample", "--epsilon", "0.7073", "--no-timing"});
  CHECK(ce.status == kExitAnomaly);
  CHECK(ce.json()["outputs"]["index"] == 2293);
  CHECK(ce.json()["outputs"]["digit"] == "2");

  Outcome cor = invoke({"corollary", "--max-n", "150", "--no-timing"});
  CHECK(cor.status == kExitOk);
  CHECK(cor.json()["outputs"]["integer_bits"] == 31);

  Outcome norm = invoke({"normality", "--multiplier", "1", "--k", "1000", "--no-timing"});
  CHECK(norm.status == kExitOk);
  Json nj = norm.json();
  std::size_t argmax = nj["outputs"]["argmax"];
  CHECK(nj["outputs"]["max"]["exact"] == normality_frac(1, argmax).to_string());

  Outcome sw = invoke({"sweep", "--depth", "9", "--csv"});
  CHECK(sw.status == kExitOk);
  std::istringstream swin(sw.out);
  CHECK(read_sweep_csv(swin).size() == 4);

  Outcome table = invoke({"table", "--no-timing"});
  CHECK(table.status == kExitOk);
  CHECK(table.json()["outputs"]["regions"].size() == 6);
}

TEST_CASE("reports are byte-identical without timing") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--pair", "3", "--no-timing"},
        std::vector<std::string>{"digits", "--epsilon", "1-pi^2/e^3", "--count", "30", "--no-timing"},
        std::vector<std::string>{"table", "--no-timing"}}) {
    CHECK(invoke(args).out == invoke(args).out);
  }
  CHECK(invoke({"digits"}).json().contains("timing_ms"));
}
