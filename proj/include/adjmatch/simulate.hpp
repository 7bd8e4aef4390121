#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "adjmatch/deck.hpp"
#include "adjmatch/match_kernel.hpp"

namespace adjmatch {

// Match count of a full arrangement of the deck. Validates that the
// arrangement really is a permutation of the deck's multiset (length kn,
// exactly k copies of each rank 1..n) and throws std::invalid_argument
// otherwise. Runs of equal ranks count once per adjacent pair, so a run
// of length L contributes L-1.
unsigned count_matches(const DeckSpec& deck, std::span<const Rank> arrangement);

struct SimulationResult {
    DeckSpec deck;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::vector<std::uint64_t> histogram;  // index r = match count, 0..(k-1)n
    double empirical_mean = 0.0;

    double frequency(std::size_t r) const {
        return static_cast<double>(histogram[r]) / static_cast<double>(trials);
    }
};

// `trials` independent uniform shuffles (Fisher-Yates with rejection-
// sampled bounded draws), each scored by the match kernel. The same
// (deck, trials, seed, workers) always produces the identical histogram;
// workers > 1 split the trials into per-worker substreams and merge by
// addition.
SimulationResult simulate(const DeckSpec& deck, std::uint64_t trials, std::uint64_t seed,
                          unsigned workers = 1);

// CSV export: header "matches,count,frequency", one row per match count
// 0..(k-1)n including empty bins, frequencies at 6 decimals.
void write_histogram_csv(std::ostream& out, const SimulationResult& result);

}  // namespace adjmatch
