#pragma once

#include <cstdint>

// Deterministic counter-based randomness.  Every sampled quantity is keyed by
// (seed, index), so results are independent of evaluation order and identical
// across serial and parallel runs.

namespace atomchip::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Independent stream for one (seed, index) pair.
class PointRng {
public:
    PointRng(std::uint64_t seed, std::uint64_t index) {
        // Decorrelate seed and index before mixing them together.
        std::uint64_t s = seed;
        const std::uint64_t a = splitmix64(s);
        s = index ^ 0x6a09e667f3bcc909ull;
        const std::uint64_t b = splitmix64(s);
        state_ = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
    }

    std::uint64_t next() { return splitmix64(state_); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace atomchip::rng
