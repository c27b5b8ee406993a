#ifndef RYSER_BUDGET_HPP
#define RYSER_BUDGET_HPP

#include <chrono>
#include <string>

namespace ryser {

// Optional wall-clock cap for a single solver call. An expired budget makes
// the solver throw CapacityError; it never silently degrades an answer.
struct Budget {
    bool enabled = false;
    std::chrono::steady_clock::time_point deadline{};

    static Budget none() { return {}; }
    static Budget after_ms(long ms);
    // Reads RYSER_BUDGET_MS; unset or empty means no cap.
    static Budget from_env();

    bool expired() const;
    void check(const std::string& what) const;
};

}  // namespace ryser

#endif
