#pragma once

#include <cstdint>

namespace wceg {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937_64 plus the
// standard distributions because those are not bit-reproducible across
// standard libraries; this generator is four lines and portable, so seeded
// experiments replay identically everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform on [0,1) with 53 random bits
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform on [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Stable per-instance seed derivation for experiment grids.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    SplitMix64 mix(base ^ (a * 0x100000001b3ULL) ^ (b * 0xc6a4a7935bd1e995ULL));
    return mix.next();
}

}  // namespace wceg
