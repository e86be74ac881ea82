#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cdom {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  /// Time limit in seconds; exceeding it fails the criterion.
  double limit = 0;
};

using ResultSink = std::function<void(const CriterionResult&)>;

/// The twelve acceptance criteria, in order. Each result is handed to `sink`
/// as soon as it is known.
std::vector<CriterionResult> run_acceptance(const ResultSink& sink = {});

/// Opt-in long-running checks: f(8), the order-9 census, and a large
/// order-13 regular sample.
std::vector<CriterionResult> run_long_checks(const ResultSink& sink = {});

/// "PASS 01 paley-identity 0.012s/1s: <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace cdom
