#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adjmatch/bigint.hpp"
#include "adjmatch/deck.hpp"

namespace adjmatch {

// n!, exact. Values are memoized in a process-wide table that only grows;
// entries are immutable once written, and growth is lock-guarded so the
// function is safe to call from any number of threads.
BigInt factorial(std::uint64_t n);

// C(n, r), exact. Out-of-range r yields 0.
BigInt binomial(std::uint64_t n, std::uint64_t r);

// (sum parts)! / prod(parts_i!), exact.
BigInt multinomial(std::span<const std::uint32_t> parts);

// Number of distinct arrangements of the deck: (kn)!/(k!)^n.
BigInt count_permutations(const DeckSpec& deck);

}  // namespace adjmatch
