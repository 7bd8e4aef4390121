#pragma once

#include <cstdint>
#include <stdexcept>

namespace adjmatch {

// A deck with `suits` identical copies of each of `ranks` distinct rank
// labels. Arrangements are counted up to suit identity, so there are
// (kn)!/(k!)^n distinct ones for k suits and n ranks.
struct DeckSpec {
    std::uint32_t suits = 0;  // k
    std::uint32_t ranks = 0;  // n

    DeckSpec(std::uint32_t k, std::uint32_t n) : suits(k), ranks(n) {
        if (k < 1 || n < 1) {
            throw std::invalid_argument("DeckSpec: suits and ranks must be >= 1");
        }
    }

    std::uint64_t card_count() const {
        return static_cast<std::uint64_t>(suits) * ranks;
    }

    // Each rank contributes at most suits-1 matches.
    std::uint64_t max_matches() const {
        return static_cast<std::uint64_t>(suits - 1) * ranks;
    }

    bool operator==(const DeckSpec&) const = default;
};

}  // namespace adjmatch
