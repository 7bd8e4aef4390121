#pragma once

#include <array>
#include <cstdint>

namespace adjmatch {

// The generators here are fixed for reproducibility: the same (seed,
// worker count) must give bit-identical simulation histograms on every
// platform and in every release.
//
// SplitMix64 (Vigna 2015) expands seeds; xoshiro256** (Blackman & Vigna
// 2018) drives the sampling. Bounded draws use rejection sampling, so
// shuffles carry no modulo bias.

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256StarStar {
public:
    // Seeds the full state from SplitMix64(seed).
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
    }

    // Substream for a parallel worker: the state is filled from the w-th
    // block of four SplitMix64(seed) outputs, so streams are disjointly
    // seeded and reproducible for a given worker count.
    static Xoshiro256StarStar for_stream(std::uint64_t seed, std::uint64_t worker) {
        SplitMix64 sm(seed);
        for (std::uint64_t skip = 0; skip < 4 * worker; ++skip) sm.next();
        Xoshiro256StarStar g(0);
        for (auto& word : g.state_) word = sm.next();
        return g;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform draw from [0, bound) by rejection: values below
    // 2^64 mod bound are discarded, so every residue is equally likely.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace adjmatch
