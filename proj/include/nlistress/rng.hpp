#pragma once

#include <cstdint>

namespace nlistress {

// Deterministic splitmix64 generator. The standard <random> distributions are
// implementation-defined, so they cannot back the byte-identical-output
// guarantee the generators make; every draw here is fully specified.
//
// Streams derived via derive(seed, index) are independent per example, which
// keeps parallel generation order-free. The sequence of draws made from one
// stream is part of the output-stability contract: reordering draws inside a
// generator is a generator_version bump.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Stream for example `index` under `seed`.
    static Rng derive(std::uint64_t seed, std::uint64_t index) {
        return Rng(scramble(scramble(seed) + kGolden * (index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return scramble(state_);
    }

    // Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
    std::uint64_t uniform(std::uint64_t n) {
        const std::uint64_t bound = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t r = next_u64();
        while (r >= bound) r = next_u64();
        return r % n;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform_real(double lo, double hi) {
        return lo + uniform_real() * (hi - lo);
    }

    bool coin() { return (next_u64() >> 63) != 0; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    static std::uint64_t scramble(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace nlistress
