#include "adjmatch/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "adjmatch/errors.hpp"
#include "adjmatch/match_kernel.hpp"

namespace adjmatch {

namespace {

std::vector<Rank> sorted_deck(const DeckSpec& deck) {
    std::vector<Rank> cards;
    cards.reserve(deck.card_count());
    for (std::uint32_t rank = 1; rank <= deck.ranks; ++rank) {
        cards.insert(cards.end(), deck.suits, static_cast<Rank>(rank));
    }
    return cards;
}

void check_cap(const DeckSpec& deck, std::uint64_t card_cap) {
    if (deck.card_count() > card_cap) {
        throw ResourceLimitError("brute force: deck of " +
                                 std::to_string(deck.card_count()) +
                                 " cards exceeds cap of " + std::to_string(card_cap));
    }
}

}  // namespace

ExactDistribution brute_force_alpha(const DeckSpec& deck, std::uint64_t card_cap) {
    check_cap(deck, card_cap);
    std::vector<Rank> cards = sorted_deck(deck);
    std::vector<std::uint64_t> tally(deck.max_matches() + 1, 0);
    do {
        ++tally[count_adjacent_equal_scalar(cards.data(), cards.size())];
    } while (std::next_permutation(cards.begin(), cards.end()));

    std::vector<BigInt> alpha;
    alpha.reserve(tally.size());
    for (const auto count : tally) {
        alpha.emplace_back(static_cast<unsigned long>(count));
    }
    // The ExactDistribution constructor re-checks the enumeration against
    // (kn)!/(k!)^n, so a missed or repeated arrangement cannot slip through.
    return ExactDistribution(deck, std::move(alpha));
}

IndicatorMoments brute_force_indicator_moments(const DeckSpec& deck, std::uint32_t i,
                                               std::uint32_t j, std::uint64_t card_cap) {
    check_cap(deck, card_cap);
    const std::uint64_t cards_total = deck.card_count();
    if (i < 1 || j < 1 || i >= cards_total || j >= cards_total || i == j) {
        throw std::invalid_argument(
            "brute_force_indicator_moments: positions must be distinct in 1..kn-1");
    }

    std::vector<Rank> cards = sorted_deck(deck);
    std::uint64_t arrangements = 0;
    std::uint64_t hits_i = 0, hits_j = 0, hits_both = 0;
    do {
        ++arrangements;
        const bool mi = cards[i - 1] == cards[i];
        const bool mj = cards[j - 1] == cards[j];
        hits_i += mi;
        hits_j += mj;
        hits_both += mi && mj;
    } while (std::next_permutation(cards.begin(), cards.end()));

    const BigInt total(static_cast<unsigned long>(arrangements));
    IndicatorMoments out{
        make_rational(BigInt(static_cast<unsigned long>(hits_i)), total),
        make_rational(BigInt(static_cast<unsigned long>(hits_both)), total),
        BigRat(0),
    };
    const BigRat e_j = make_rational(BigInt(static_cast<unsigned long>(hits_j)), total);
    out.cov = out.e_ij - out.e_i * e_j;
    return out;
}

}  // namespace adjmatch
