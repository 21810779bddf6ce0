#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vsaogm {

/// Portable seeded generator.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not portable across library
/// implementations, so the conversions below are done by hand:
///
///   uniform01()      = (next() >> 11) * 2^-53          in [0, 1)
///   uniform(a, b)    = a + (b - a) * uniform01()
///   below(n)         = Lemire-style rejection on next() in [0, n)
///
/// Every generator in the library is a pure function of its seed through
/// this class, so maps and datasets reproduce bit-for-bit across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t below(std::uint64_t n);

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer, used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed);

}  // namespace vsaogm
