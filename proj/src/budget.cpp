#include "weylinv/budget.hpp"

#include <cstdlib>

namespace weylinv {

namespace {

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0') return fallback;
    return static_cast<std::uint64_t>(x);
}

}  // namespace

Budget Budget::from_env() {
    Budget b;
    b.max_group_order = env_u64("WEYLINV_MAX_GROUP", b.max_group_order);
    b.max_monomials = env_u64("WEYLINV_MAX_MONOMIALS", b.max_monomials);
    return b;
}

}  // namespace weylinv
