#include "vsaogm/rng.hpp"

namespace vsaogm {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n <= 1) return 0;
    // Values below 2^64 mod n are rejected so every residue is equally likely.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t v = next();
        if (v >= threshold) return v % n;
    }
}

std::uint64_t mix_seed(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace vsaogm
