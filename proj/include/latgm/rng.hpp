#pragma once

#include <cstdint>
#include <random>

#include "latgm/rational.hpp"

namespace latgm {

/// Deterministic seeded generator. All randomized operations in the library
/// draw from one of these; identical seeds give identical outputs
/// byte-for-byte. child() derives an independent stream for a sub-task so
/// that adding draws in one place does not shift every later stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi], by rejection (engine output is
    /// specified by the standard, so this is portable).
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + draw % span;
    }

    bool coin() { return (engine_() & 1u) != 0; }

    /// Positive rational with numerator and denominator in [1, 100].
    Rat positive_rational() {
        const auto num = uniform(1, 100);
        const auto den = uniform(1, 100);
        return Rat(Int(num), Int(den));
    }

    Rng child(std::uint64_t tag) const { return Rng(mix(seed_, tag)); }

private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace latgm
