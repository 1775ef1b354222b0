#pragma once

// Report records shared by all verification suites.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace deltacat {

struct Counterexample {
  std::string operation;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failed = 0;
  std::size_t counterexample_limit = 10;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const noexcept { return failed == 0; }
  [[nodiscard]] std::uint64_t passed_count() const noexcept { return instances - failed; }

  void merge(const CheckReport& other) {
    instances += other.instances;
    failed += other.failed;
    for (const Counterexample& cx : other.counterexamples) {
      if (counterexamples.size() >= counterexample_limit) break;
      counterexamples.push_back(cx);
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

// Tallies one instance; the counterexample is only materialized on failure.
template <class MakeCx>
void check(CheckReport& report, bool ok, MakeCx&& make_counterexample) {
  ++report.instances;
  if (ok) return;
  ++report.failed;
  if (report.counterexamples.size() < report.counterexample_limit)
    report.counterexamples.push_back(make_counterexample());
}

}  // namespace deltacat
