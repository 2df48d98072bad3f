#include <doctest.h>

#include <regex>

#include "cli.hpp"

using namespace krein;
using namespace krein::cli;

namespace {
const std::string kData = KREIN_TEST_DATA_DIR;

std::string strip_wall_time(std::string text) {
  return std::regex_replace(text, std::regex("\"wall_time_ms\": [0-9.e+-]+"),
                            "\"wall_time_ms\": 0");
}
}  // namespace

TEST_CASE("kolmogorov subcommand") {
  RunConfig c;
  c.subcommand = "kolmogorov";
  c.input_path = kData + "/kernel_scalar_indefinite.json";
  const Report report = run(c);
  CHECK(report.pass());
  CHECK(exit_code(report) == 0);
  const std::string json = report_to_json(report);
  CHECK(json.find("\"signature\": [\n      1,\n      1\n    ]") != std::string::npos);
}

TEST_CASE("counterexample subcommand and csv schema") {
  RunConfig c;
  c.subcommand = "counterexample";
  c.m_max = 10;
  c.format = "csv";
  const Report report = run(c);
  CHECK(report.pass());
  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("# krein counterexample csv v1", 0) == 0);
  // The m = 10 row carries C >= 19.
  std::istringstream lines(csv);
  std::string line, last;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#') last = line;
  CHECK(last.rfind("10,", 0) == 0);
  const double c10 = std::stod(last.substr(3, last.find(',', 3) - 3));
  CHECK(c10 >= 19.0);
}

TEST_CASE("invariant subcommand") {
  RunConfig c;
  c.subcommand = "invariant";
  c.input_path = kData + "/kernel_z2_swap.json";
  c.action_path = kData + "/action_z2_swap.json";
  const Report report = run(c);
  CHECK(report.pass());
  CHECK(report.payload_json.find("\"fundamentally_reducible_via_natural_symmetry\": true") !=
        std::string::npos);
}

TEST_CASE("weyl subcommand") {
  RunConfig c;
  c.subcommand = "weyl";
  c.dim = 1;
  c.neg = 0;
  c.cutoff = 20;
  c.samples = 12;
  c.seed = 7;
  const Report report = run(c);
  CHECK(report.pass());
  CHECK(report.payload_json.find("\"ccr_exact\": true") != std::string::npos);
}

TEST_CASE("gns subcommand") {
  RunConfig c;
  c.subcommand = "gns";
  c.input_path = kData + "/gns_m2_indefinite.json";
  const Report report = run(c);
  CHECK(report.pass());
  CHECK(report.payload_json.find("\"signature\": [\n    2,\n    2\n  ]") != std::string::npos);
  CHECK(report.payload_json.find("\"negative_squares\": 2") != std::string::npos);
  CHECK(report.payload_json.find("\"established\": true") != std::string::npos);
}

TEST_CASE("stinespring subcommand") {
  RunConfig c;
  c.subcommand = "stinespring";
  c.input_path = kData + "/map_transpose.json";
  const Report report = run(c);
  CHECK(report.pass());
  CHECK(report.payload_json.find("\"completely_positive\": false") != std::string::npos);
  const auto pos = report.payload_json.find("\"cb_upper_bound\": ");
  REQUIRE(pos != std::string::npos);
  const double cb = std::stod(report.payload_json.substr(pos + 18));
  CHECK(cb == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("exit codes follow the check verdicts") {
  Report report;
  report.checks.push_back(Check{"a", 0.0, 1.0, true});
  CHECK(exit_code(report) == 0);
  report.checks.push_back(Check{"b", 2.0, 1.0, false});
  CHECK(exit_code(report) == 1);
}

TEST_CASE("reports are deterministic up to the wall time") {
  RunConfig c;
  c.subcommand = "weyl";
  c.dim = 2;
  c.neg = 1;
  c.cutoff = 10;
  c.samples = 8;
  c.seed = 5;
  const std::string a = strip_wall_time(report_to_json(run(c)));
  const std::string b = strip_wall_time(report_to_json(run(c)));
  CHECK(a == b);
}

TEST_CASE("configuration errors are invalid_argument (exit code 2)") {
  RunConfig c;
  c.subcommand = "nonsense";
  CHECK_THROWS_AS((void)run(c), std::invalid_argument);

  c.subcommand = "gns";
  c.input_path = kData + "/broken.json";
  CHECK_THROWS((void)run(c));

  RunConfig csv_misuse;
  csv_misuse.subcommand = "gns";
  csv_misuse.input_path = kData + "/gns_cz2.json";
  csv_misuse.format = "csv";
  CHECK_THROWS_AS((void)run(csv_misuse), std::invalid_argument);

  RunConfig missing_action;
  missing_action.subcommand = "invariant";
  missing_action.input_path = kData + "/kernel_z2_swap.json";
  CHECK_THROWS_AS((void)run(missing_action), std::invalid_argument);

  RunConfig not_invariant;
  not_invariant.subcommand = "invariant";
  not_invariant.input_path = kData + "/kernel_scalar_indefinite.json";
  not_invariant.action_path = kData + "/action_z2_swap.json";
  CHECK_THROWS_AS((void)run(not_invariant), std::invalid_argument);
}

TEST_CASE("gns on the explicit algebra schema") {
  RunConfig c;
  c.subcommand = "gns";
  c.input_path = kData + "/gns_cz2.json";
  const Report report = run(c);
  CHECK(report.pass());
  CHECK(report.payload_json.find("\"signature\": [\n    1,\n    1\n  ]") != std::string::npos);
}
