#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncalg/json_io.hpp"

namespace ncalg {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one line per sub-check
  std::vector<std::string> anchors;
  double seconds = 0;  // wall time, never serialized
};

// Runs the numbered acceptance criteria (all when `which` is empty).  An
// exception inside a criterion is recorded as a failing detail.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& which = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});

int acceptance_count();
Json acceptance_json(const std::vector<CriterionResult>& rs);

}  // namespace ncalg
