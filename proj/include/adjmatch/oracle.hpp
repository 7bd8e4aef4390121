#pragma once

#include <cstdint>

#include "adjmatch/bigint.hpp"
#include "adjmatch/deck.hpp"
#include "adjmatch/exact.hpp"

namespace adjmatch {

// Ground truth by exhaustion: every distinct arrangement of the deck's
// multiset is visited exactly once (in-place lexicographic successor), so
// no formula from the analytic pipeline is involved.
//
// The cap bounds the enumeration; 14 cards is roughly 10^7 arrangements
// for mixed decks (the all-distinct k=1 column is the slow extreme).
inline constexpr std::uint64_t kDefaultOracleCardCap = 14;

ExactDistribution brute_force_alpha(const DeckSpec& deck,
                                    std::uint64_t card_cap = kDefaultOracleCardCap);

struct IndicatorMoments {
    BigRat e_i;    // E(M_i)
    BigRat e_ij;   // E(M_i M_j)
    BigRat cov;    // Cov(M_i, M_j)
};

// Exact indicator moments over the uniform distribution on distinct
// arrangements. Positions are 1-based: M_i is the match between cards i
// and i+1, so 1 <= i, j <= kn-1 and i != j.
IndicatorMoments brute_force_indicator_moments(const DeckSpec& deck, std::uint32_t i,
                                               std::uint32_t j,
                                               std::uint64_t card_cap = kDefaultOracleCardCap);

}  // namespace adjmatch
