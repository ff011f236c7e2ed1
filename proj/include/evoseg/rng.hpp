#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace evoseg {

// Seeded generator behind every stochastic decision in the library.
// Bounded integers and unit reals are derived from the raw mt19937_64
// stream by hand, so a seed pins down the exact draw sequence of a run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t u64() { return gen_(); }

    /// Uniform in [0,1) with 53-bit resolution.
    double real01() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0,n), n >= 1. Rejection sampling, no modulo bias.
    std::size_t index(std::size_t n) {
        const auto span = static_cast<std::uint64_t>(n);
        constexpr std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = top - top % span;
        std::uint64_t draw;
        do {
            draw = u64();
        } while (draw >= limit);
        return static_cast<std::size_t>(draw % span);
    }

    bool coin(double p) { return real01() < p; }

    std::uint8_t bit() { return static_cast<std::uint8_t>(u64() & 1u); }

private:
    std::mt19937_64 gen_;
};

}  // namespace evoseg
