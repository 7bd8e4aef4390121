#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <thread>
#include <vector>

#include "adjmatch/combinatorics.hpp"

using namespace adjmatch;

namespace {

// Plain repeated-multiplication oracle, independent of the cached table.
BigInt slow_factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

TEST_CASE("factorial base cases") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(4) == 24);
}

TEST_CASE("factorial of 52 and the shift identity") {
    const BigInt f52(
        "80658175170943878571660636856403766975289505440883277824000000000000");
    CHECK(factorial(52) == f52);
    CHECK(factorial(52) == 52 * factorial(51));
}

TEST_CASE("factorial matches the repeated-multiplication oracle up to 60") {
    for (unsigned n = 0; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(factorial(n) == slow_factorial(n));
    }
}

TEST_CASE("binomial agrees with the Pascal recurrence") {
    std::vector<std::vector<BigInt>> pascal(61);
    for (unsigned n = 0; n <= 60; ++n) {
        pascal[n].assign(n + 1, BigInt(1));
        for (unsigned r = 1; r < n; ++r) {
            pascal[n][r] = pascal[n - 1][r - 1] + pascal[n - 1][r];
        }
        for (unsigned r = 0; r <= n; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK(binomial(n, r) == pascal[n][r]);
        }
    }
    CHECK(binomial(5, 9) == 0);
}

TEST_CASE("multinomial examples") {
    const std::array<std::uint32_t, 5> example{1, 0, 0, 0, 1};
    CHECK(multinomial(example) == 2);

    const std::array<std::uint32_t, 1> single{7};
    CHECK(multinomial(single) == 1);

    const std::array<std::uint32_t, 2> pair{2, 2};
    CHECK(multinomial(pair) == 6);
}

TEST_CASE("multinomial matches the factorial-ratio oracle") {
    const std::vector<std::vector<std::uint32_t>> cases = {
        {3, 4, 5}, {0, 0, 0}, {10, 1}, {2, 2, 2, 2}, {60}, {1, 1, 1, 1, 1, 1}};
    for (const auto& parts : cases) {
        unsigned total = 0;
        for (auto p : parts) total += p;
        BigInt expected = slow_factorial(total);
        for (auto p : parts) expected /= slow_factorial(p);
        CHECK(multinomial(parts) == expected);
    }
}

TEST_CASE("count_permutations examples") {
    CHECK(count_permutations(DeckSpec(4, 2)) == 70);
    CHECK(count_permutations(DeckSpec(1, 5)) == 120);
    CHECK(count_permutations(DeckSpec(2, 2)) == 6);
}

TEST_CASE("count_permutations inverts exactly") {
    for (std::uint32_t k = 1; k <= 5; ++k) {
        for (std::uint32_t n = 1; n <= 8; ++n) {
            const DeckSpec deck(k, n);
            CHECK(count_permutations(deck) * pow_ui(factorial(k), n) ==
                  factorial(deck.card_count()));
        }
    }
}

TEST_CASE("factorial cache is safe under concurrent growth") {
    constexpr unsigned kThreads = 8;
    std::array<BigInt, kThreads> results;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < kThreads; ++t) {
        pool.emplace_back([&results, t] { results[t] = factorial(300 + t); });
    }
    for (auto& t : pool) t.join();
    for (unsigned t = 0; t < kThreads; ++t) {
        CHECK(results[t] == slow_factorial(300 + t));
    }
}

TEST_CASE("deck validation") {
    CHECK_THROWS_AS(DeckSpec(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(DeckSpec(3, 0), std::invalid_argument);
    const DeckSpec deck(4, 13);
    CHECK(deck.card_count() == 52);
    CHECK(deck.max_matches() == 39);
}
