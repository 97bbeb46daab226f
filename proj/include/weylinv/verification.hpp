#pragma once

#include <string>
#include <vector>

#include "weylinv/budget.hpp"

namespace weylinv {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary when passing
};

// The full desk-scale verification battery, criteria 1..9.  Shared by the
// acceptance test binary and the CLI manifest mode.
CriterionResult run_criterion(int id, const Budget& budget = {});
std::vector<CriterionResult> run_acceptance(const Budget& budget = {});

}  // namespace weylinv
