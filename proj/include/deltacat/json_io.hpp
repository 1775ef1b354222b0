#pragma once

// JSON rendering for suite reports. Kept separate from suites.hpp so that
// translation units that never emit JSON do not pay for the parser.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "deltacat/suites.hpp"

namespace deltacat {

[[nodiscard]] inline nlohmann::json to_json(const SuiteReport& report) {
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const Counterexample& cx : report.counterexamples) {
    counterexamples.push_back({{"operation", cx.operation},
                               {"inputs", cx.inputs},
                               {"expected", cx.expected},
                               {"actual", cx.actual}});
  }
  return nlohmann::json{
      {"suite", report.suite},
      {"config",
       {{"max_dim", to_index(report.config.max_dim)},
        {"grid_denominator", to_index(report.config.grid_denominator)},
        {"sample_seed", to_index(report.config.sample_seed)},
        {"deep", report.config.deep},
        {"counterexample_limit", static_cast<std::uint64_t>(report.config.counterexample_limit)}}},
      {"instances", report.instances},
      {"passed", report.passed},
      {"failed", report.failed},
      {"counterexamples", counterexamples}};
}

[[nodiscard]] inline SuiteReport suite_report_from_json(const nlohmann::json& j) {
  SuiteReport report;
  report.suite = j.at("suite").get<std::string>();
  const nlohmann::json& config = j.at("config");
  report.config.suite = report.suite;
  report.config.max_dim = Natural(config.at("max_dim").get<std::uint64_t>());
  report.config.grid_denominator = Natural(config.at("grid_denominator").get<std::uint64_t>());
  report.config.sample_seed = Natural(config.at("sample_seed").get<std::uint64_t>());
  report.config.deep = config.at("deep").get<bool>();
  report.config.counterexample_limit =
      static_cast<std::size_t>(config.at("counterexample_limit").get<std::uint64_t>());
  report.instances = j.at("instances").get<std::uint64_t>();
  report.passed = j.at("passed").get<std::uint64_t>();
  report.failed = j.at("failed").get<std::uint64_t>();
  for (const nlohmann::json& cx : j.at("counterexamples")) {
    report.counterexamples.push_back(Counterexample{cx.at("operation").get<std::string>(),
                                                    cx.at("inputs").get<std::string>(),
                                                    cx.at("expected").get<std::string>(),
                                                    cx.at("actual").get<std::string>()});
  }
  return report;
}

[[nodiscard]] inline std::string render_json(const SuiteReport& report) {
  return to_json(report).dump(2) + "\n";
}

}  // namespace deltacat
