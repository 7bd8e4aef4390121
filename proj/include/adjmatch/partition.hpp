#pragma once

#include <cstdint>
#include <vector>

#include "adjmatch/deck.hpp"

namespace adjmatch {

// A partition of k, stored as a multiplicity vector: multiplicity[i-1] is
// the number of parts equal to i, so sum(i * multiplicity[i-1]) == k.
//
// A partition describes how the k cards of one rank are glued into blocks:
// a block of size i forces i-1 adjacent matches. parts() counts the blocks
// and glued_matches() the forced matches, and parts() + glued_matches() == k.
struct Partition {
    std::vector<std::uint32_t> multiplicity;

    std::uint32_t sum() const {
        std::uint32_t total = 0;
        for (std::size_t i = 0; i < multiplicity.size(); ++i) {
            total += multiplicity[i] * static_cast<std::uint32_t>(i + 1);
        }
        return total;
    }

    // nu: number of blocks.
    std::uint32_t parts() const {
        std::uint32_t total = 0;
        for (auto m : multiplicity) total += m;
        return total;
    }

    // mu: matches forced by gluing, sum over blocks of (size - 1).
    std::uint32_t glued_matches() const { return sum() - parts(); }

    bool operator==(const Partition&) const = default;
};

// All partitions of k, each exactly once, in descending lexicographic order
// on the multiplicity vectors. The order is part of the contract: tallies
// and parallel reductions index partitions by position in this list.
//
// For k = 4 the order is (4,0,0,0), (2,1,0,0), (1,0,1,0), (0,2,0,0), (0,0,0,1).
std::vector<Partition> enumerate_partitions(std::uint32_t k);

// A choice of partition for each of the n ranks, recorded as counts:
// counts[i] ranks use enumerate_partitions(deck.suits)[i].
struct PartitionTally {
    DeckSpec deck;
    std::vector<std::uint32_t> counts;

    // Total matches forced by the glued blocks across all ranks.
    std::uint64_t forced_matches(const std::vector<Partition>& partitions) const;

    // Checks sum(counts) == ranks and the forced-match range; throws
    // std::invalid_argument on violation.
    void validate(const std::vector<Partition>& partitions) const;
};

}  // namespace adjmatch
