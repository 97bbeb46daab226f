// Acceptance battery: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "weylinv/verification.hpp"

int main() {
    const weylinv::Budget budget = weylinv::Budget::from_env();
    bool all = true;
    for (int id = 1; id <= 9; ++id) {
        weylinv::CriterionResult res = weylinv::run_criterion(id, budget);
        std::printf("criterion %d (%s): %s -- %s\n", res.id, res.name.c_str(),
                    res.pass ? "PASS" : "FAIL", res.detail.c_str());
        std::fflush(stdout);
        if (!res.pass) all = false;
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
