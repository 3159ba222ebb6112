#ifndef FSIM_ACCEPTANCE_HPP
#define FSIM_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace fsim {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Names of the acceptance criteria, in order.
std::vector<std::pair<int, std::string>> acceptance_criteria();

/// Run every acceptance criterion and return one result per criterion.
std::vector<CriterionResult> run_acceptance();

}  // namespace fsim

#endif
