#include "adjmatch/simulate.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "adjmatch/rng.hpp"

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

void shuffle(std::vector<Rank>& cards, Xoshiro256StarStar& rng) {
    for (std::size_t i = cards.size() - 1; i > 0; --i) {
        const std::size_t j = rng.uniform_below(i + 1);
        std::swap(cards[i], cards[j]);
    }
}

}  // namespace

unsigned count_matches(const DeckSpec& deck, std::span<const Rank> arrangement) {
    if (arrangement.size() != deck.card_count()) {
        throw std::invalid_argument("count_matches: arrangement has wrong length");
    }
    std::vector<std::uint32_t> copies(deck.ranks, 0);
    for (const Rank card : arrangement) {
        if (card < 1 || card > deck.ranks) {
            throw std::invalid_argument("count_matches: rank label out of range");
        }
        ++copies[card - 1];
    }
    for (const auto c : copies) {
        if (c != deck.suits) {
            throw std::invalid_argument("count_matches: wrong copy count for a rank");
        }
    }
    return count_adjacent_equal(arrangement.data(), arrangement.size());
}

SimulationResult simulate(const DeckSpec& deck, std::uint64_t trials, std::uint64_t seed,
                          unsigned workers) {
    if (trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    if (deck.ranks > 65535) {
        throw std::invalid_argument("simulate: ranks beyond 16-bit labels");
    }
    workers = std::max(1u, workers);
    if (workers > trials) workers = static_cast<unsigned>(trials);

    const std::size_t bins = deck.max_matches() + 1;
    std::vector<std::vector<std::uint64_t>> local(workers,
                                                  std::vector<std::uint64_t>(bins, 0));

    // Worker w draws from its own substream and owns a fixed slice of the
    // trial budget, so the merged histogram depends only on (deck, trials,
    // seed, workers).
    const std::uint64_t base = trials / workers;
    const std::uint64_t extra = trials % workers;
    auto run_worker = [&](unsigned w) {
        Xoshiro256StarStar rng = Xoshiro256StarStar::for_stream(seed, w);
        std::vector<Rank> cards = sorted_deck(deck);
        const std::uint64_t quota = base + (w < extra ? 1 : 0);
        for (std::uint64_t t = 0; t < quota; ++t) {
            shuffle(cards, rng);
            const unsigned m = count_adjacent_equal(cards.data(), cards.size());
            ++local[w][m];
        }
    };

    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& t : pool) t.join();
    }

    SimulationResult result{deck, trials, seed, workers, std::vector<std::uint64_t>(bins, 0), 0.0};
    for (unsigned w = 0; w < workers; ++w) {
        for (std::size_t r = 0; r < bins; ++r) result.histogram[r] += local[w][r];
    }
    std::uint64_t weighted = 0;
    for (std::size_t r = 0; r < bins; ++r) {
        weighted += result.histogram[r] * r;
    }
    result.empirical_mean = static_cast<double>(weighted) / static_cast<double>(trials);
    return result;
}

void write_histogram_csv(std::ostream& out, const SimulationResult& result) {
    out << "matches,count,frequency\n";
    char buf[32];
    for (std::size_t r = 0; r < result.histogram.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.6f", result.frequency(r));
        out << r << ',' << result.histogram[r] << ',' << buf << '\n';
    }
}

}  // namespace adjmatch
