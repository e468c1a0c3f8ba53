#pragma once

#include <functional>
#include <string>
#include <vector>

namespace frobmean {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(unsigned workers)> run;
};

/// The fourteen acceptance checks at their fixed grids and tolerances.
const std::vector<Criterion>& acceptance_criteria();

CriterionResult run_criterion(int id, unsigned workers);

/// "PASS  3  name  detail" (or FAIL).
std::string format_result(const CriterionResult& r);

}  // namespace frobmean
