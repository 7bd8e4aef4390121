#include "adjmatch/combinatorics.hpp"

#include <mutex>

namespace adjmatch {

namespace {

// Append-only factorial table. Readers copy values out under the lock;
// published entries are never modified.
struct FactorialTable {
    std::mutex mutex;
    std::vector<BigInt> values{BigInt(1)};  // values[0] = 0!

    BigInt get(std::uint64_t n) {
        std::lock_guard lock(mutex);
        while (values.size() <= n) {
            BigInt next = values.back() * static_cast<unsigned long>(values.size());
            values.push_back(std::move(next));
        }
        return values[n];
    }
};

FactorialTable& table() {
    static FactorialTable t;
    return t;
}

}  // namespace

BigInt factorial(std::uint64_t n) { return table().get(n); }

BigInt binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

BigInt multinomial(std::span<const std::uint32_t> parts) {
    std::uint64_t total = 0;
    for (auto p : parts) total += p;
    BigInt result = factorial(total);
    for (auto p : parts) {
        if (p > 1) result = exact_div(result, factorial(p));
    }
    return result;
}

BigInt count_permutations(const DeckSpec& deck) {
    const BigInt numerator = factorial(deck.card_count());
    const BigInt denominator = pow_ui(factorial(deck.suits), deck.ranks);
    return exact_div(numerator, denominator);
}

}  // namespace adjmatch
