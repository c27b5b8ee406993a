#include "ryser/budget.hpp"

#include <cstdlib>

#include "ryser/errors.hpp"

namespace ryser {

Budget Budget::after_ms(long ms) {
    Budget b;
    b.enabled = true;
    b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    return b;
}

Budget Budget::from_env() {
    const char* v = std::getenv("RYSER_BUDGET_MS");
    if (!v || !*v) return none();
    char* end = nullptr;
    long ms = std::strtol(v, &end, 10);
    if (end == v || *end || ms <= 0) return none();
    return after_ms(ms);
}

bool Budget::expired() const {
    return enabled && std::chrono::steady_clock::now() > deadline;
}

void Budget::check(const std::string& what) const {
    if (expired()) throw CapacityError(what + ": time budget exceeded");
}

}  // namespace ryser
