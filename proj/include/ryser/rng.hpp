#ifndef RYSER_RNG_HPP
#define RYSER_RNG_HPP

#include <cstdint>
#include <random>

namespace ryser {

// Uniform integer in [0, n) by rejection sampling. mt19937_64 output is fixed
// by the standard, and this avoids std::uniform_int_distribution, whose
// mapping differs between standard library implementations.
inline uint64_t bounded_u64(std::mt19937_64& rng, uint64_t n) {
    if (n == 0) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

inline int bounded_int(std::mt19937_64& rng, int n) {
    return static_cast<int>(bounded_u64(rng, static_cast<uint64_t>(n)));
}

}  // namespace ryser

#endif
