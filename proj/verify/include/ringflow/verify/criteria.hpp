#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ringflow::verify {

struct CriterionReport {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;  // one line per individual check
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<void(CriterionReport&)> run;
};

/// The ten acceptance criteria in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs one criterion; an exception escaping the check is a failure.
CriterionReport run_criterion(const Criterion& criterion);

/// `[PASS] C01 <title> (1.2 s)` followed by indented detail lines.
std::string format_report(const CriterionReport& report);

}  // namespace ringflow::verify
