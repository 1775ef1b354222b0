#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "deltacat/json_io.hpp"
#include "deltacat/suites.hpp"

using namespace deltacat;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string command = std::string(DELTACAT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
    result.output.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

}  // namespace

TEST_CASE("enumerate lists maps with a trailing count") {
  RunResult r = run_cli("enumerate 1 1");
  CHECK(r.exit_code == 0);
  std::vector<std::string> lines = lines_of(r.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "0,0");
  CHECK(lines[1] == "0,1");
  CHECK(lines[2] == "1,1");
  CHECK(lines[3] == "count: 3");

  RunResult wide = run_cli("enumerate 2 2");
  std::vector<std::string> wide_lines = lines_of(wide.output);
  REQUIRE(wide_lines.size() == 11);
  CHECK(wide_lines.back() == "count: 10");

  RunResult points = run_cli("enumerate 0 4");
  CHECK(lines_of(points.output).size() == 6);
}

TEST_CASE("evaluate prints exact values") {
  CHECK(run_cli("evaluate hadamard --alpha 0,2 --beta 1,2 --p 2 --q 2").output == "0,4\n");
  CHECK(run_cli("evaluate hadamard --alpha 0,2 --beta 1,2").output == "0,4\n");
  CHECK(run_cli("evaluate contraction --w 1/2,1/2 --t 1").output == "1/2,1/2\n");
  CHECK(run_cli("evaluate contraction --w 1/2,1/2 --t 1/2").output == "3/4,1/4\n");
  CHECK(run_cli("evaluate homotopy-point --alpha 0,1 --beta 0,1 --u 1/2,1/2").output ==
        "1/2,1/2\n");
  CHECK(run_cli("evaluate delta --alpha 0,2 --beta 1,2 --gamma 0,1").output == "0,4\n");
  CHECK(run_cli("evaluate theta --f 0 --g 0 --alpha 0,1 --beta 0,1").output == "0\n");
}

TEST_CASE("probe reports the exact deviation and witness") {
  RunResult r = run_cli("probe-discrepancy --n 1 --m 1 --alpha 0,1 --grid-denominator 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("max-deviation: 1/4") != std::string::npos);
  CHECK(r.output.find("witness: u=1/2,1/2 t=1/2") != std::string::npos);
  CHECK(r.output.find("vertex-agreement: exact") != std::string::npos);
  CHECK(r.output.find("end-slice-agreement: exact") != std::string::npos);
  CHECK(r.output.find("note:") != std::string::npos);

  RunResult flat = run_cli("probe-discrepancy --alpha 0,0 --grid-denominator 2");
  CHECK(flat.exit_code == 0);
  CHECK(flat.output.find("max-deviation: 0") != std::string::npos);

  RunResult coarse = run_cli("probe-discrepancy --alpha 0,1 --grid-denominator 1");
  CHECK(coarse.exit_code == 0);
  CHECK(coarse.output.find("max-deviation: 0") != std::string::npos);
}

TEST_CASE("verify exit status tracks the suite outcome") {
  RunResult homotopy = run_cli("verify --suite homotopy --max-dim 2");
  CHECK(homotopy.exit_code == 0);
  CHECK(homotopy.output.find("result: PASS") != std::string::npos);

  RunResult degenerate = run_cli("verify --suite all --max-dim 0 --grid-denominator 2");
  CHECK(degenerate.exit_code == 0);

  RunResult repeat_a = run_cli("verify --suite core --max-dim 2");
  RunResult repeat_b = run_cli("verify --suite core --max-dim 2");
  CHECK(repeat_a.output == repeat_b.output);
  CHECK(repeat_a.exit_code == 0);
}

TEST_CASE("verify emits schema-shaped json that round-trips") {
  RunResult r = run_cli("verify --suite homotopy --max-dim 2 --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json parsed = nlohmann::json::parse(r.output);
  CHECK(parsed.at("suite") == "homotopy");
  CHECK(parsed.at("failed") == 0);
  CHECK(parsed.at("instances").get<std::uint64_t>() > 0);
  CHECK(parsed.at("passed") == parsed.at("instances"));
  CHECK(parsed.at("counterexamples").is_array());
  CHECK(parsed.at("config").at("max_dim") == 2);

  SuiteReport back = suite_report_from_json(parsed);
  CHECK(back.suite == "homotopy");
  CHECK(back.instances == parsed.at("instances").get<std::uint64_t>());
  CHECK(back.failed == 0);
  CHECK(to_json(back) == parsed);
}

TEST_CASE("json round-trip preserves counterexamples") {
  SuiteReport report;
  report.suite = "kernel";
  report.config.suite = "kernel";
  report.config.max_dim = 2;
  report.instances = 5;
  report.passed = 4;
  report.failed = 1;
  report.counterexamples.push_back(
      Counterexample{"eta-round-trip", "f=0,1 g=0,0", "(f,g)", "(0,0 ; 0,1)"});
  SuiteReport back = suite_report_from_json(to_json(report));
  CHECK(back.suite == report.suite);
  CHECK(back.instances == report.instances);
  CHECK(back.passed == report.passed);
  CHECK(back.failed == report.failed);
  REQUIRE(back.counterexamples.size() == 1);
  CHECK(back.counterexamples[0].operation == "eta-round-trip");
  CHECK(back.counterexamples[0].inputs == "f=0,1 g=0,0");
  CHECK(back.counterexamples[0].expected == "(f,g)");
  CHECK(back.counterexamples[0].actual == "(0,0 ; 0,1)");
  CHECK(to_json(back) == to_json(report));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("evaluate hadamard --alpha 0,x --beta 1,1").exit_code == 2);
  CHECK(run_cli("evaluate hadamard --beta 1,1").exit_code == 2);
  CHECK(run_cli("probe-discrepancy --alpha 2,0").exit_code == 2);
  CHECK(run_cli("enumerate 1").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("suite runners cover every named suite") {
  for (const std::string& name : suite_names()) {
    SuiteConfig config;
    config.suite = name;
    config.max_dim = 1;
    config.grid_denominator = 2;
    SuiteReport report = run_suite(config);
    CHECK(report.suite == name);
    CHECK(report.failed == 0);
    CHECK(report.instances > 0);
    CHECK(report.passed + report.failed == report.instances);
  }
  SuiteConfig bad;
  bad.suite = "nonsense";
  CHECK_THROWS_AS(run_suite(bad), DomainError);
}
