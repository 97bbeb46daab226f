#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylinv {

// Raised when a computation would exceed the configured resource budget.
// The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct Budget {
    std::uint64_t max_group_order = 1'000'000;  // Weyl group enumeration
    std::uint64_t max_monomials = 200'000;      // ambient monomials per degree piece

    void check_group(std::uint64_t order) const {
        if (order > max_group_order)
            throw BudgetError("Weyl group order " + std::to_string(order) +
                              " exceeds budget " + std::to_string(max_group_order));
    }
    void check_monomials(std::uint64_t count) const {
        if (count > max_monomials)
            throw BudgetError("degree piece with " + std::to_string(count) +
                              " monomials exceeds budget " + std::to_string(max_monomials));
    }

    // Default budget, with WEYLINV_MAX_MONOMIALS / WEYLINV_MAX_GROUP overrides.
    static Budget from_env();
};

}  // namespace weylinv
