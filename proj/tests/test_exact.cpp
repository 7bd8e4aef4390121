#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "adjmatch/combinatorics.hpp"
#include "adjmatch/decimal.hpp"
#include "adjmatch/errors.hpp"
#include "adjmatch/exact.hpp"

using namespace adjmatch;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
    std::vector<BigInt> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

const std::vector<BigInt> kExampleBeta = ints({70, 210, 270, 190, 78, 18, 2});
const std::vector<BigInt> kExampleAlpha = ints({2, 6, 18, 18, 18, 6, 2});

}  // namespace

TEST_CASE("beta for the two-rank four-suit deck") {
    const DeckSpec deck(4, 2);
    CHECK(beta_general(deck, 0) == 70);
    CHECK(beta_general(deck, 3) == 190);
    CHECK(beta_general(deck, 6) == 2);
    CHECK(beta_polynomial_general(deck).coefficients == kExampleBeta);
    CHECK_THROWS_AS(beta_general(deck, 7), std::invalid_argument);
}

TEST_CASE("four-suit beta specialization") {
    for (std::uint64_t m = 0; m <= 6; ++m) {
        CHECK(beta_four_suit(2, m) == kExampleBeta[m]);
    }
    CHECK(beta_four_suit(1, 0) == 1);
    CHECK(beta_four_suit(1, 3) == 1);
    CHECK(beta_polynomial_four_suit(2).coefficients == kExampleBeta);
    CHECK_THROWS_AS(beta_four_suit(2, 7), std::invalid_argument);
}

TEST_CASE("four-suit beta equals the general route") {
    for (std::uint32_t n = 1; n <= 5; ++n) {
        const BigPolynomial spec = beta_polynomial_four_suit(n);
        const BigPolynomial general = beta_polynomial_general(DeckSpec(4, n));
        CHECK(spec == general);
    }
}

TEST_CASE("inclusion-exclusion transform") {
    const BigPolynomial beta{kExampleBeta};
    CHECK(alpha_from_beta(beta, 0) == 2);
    CHECK(alpha_from_beta(beta, 1) == 6);
    CHECK(alpha_from_beta(beta, 6) == 2);
    CHECK(alpha_vector_from_beta(beta) == kExampleAlpha);

    const BigPolynomial degenerate{ints({41})};
    CHECK(alpha_from_beta(degenerate, 0) == 41);

    CHECK_THROWS_AS(alpha_from_beta(beta, 7), std::invalid_argument);

    // A vector that cannot be a valid overcount: forces a negative alpha_0.
    const BigPolynomial bogus{ints({1, 3})};
    CHECK_THROWS_AS(alpha_from_beta(bogus, 0), InternalInconsistencyError);
}

TEST_CASE("single-sum four-suit alpha values") {
    CHECK(alpha_four_suit(0, 0) == 1);
    CHECK(alpha_four_suit(1, 0) == 0);
    CHECK(alpha_four_suit(2, 0) == 2);
    CHECK(alpha_four_suit(3, 0) == 1092);
    CHECK(alpha_four_suit(4, 0) == 2265024);
    CHECK(alpha_four_suit(5, 0) == BigInt("11804626080"));
    CHECK(alpha_four_suit(2, 1) == 6);
    CHECK_THROWS_AS(alpha_four_suit(2, 7), std::invalid_argument);
}

TEST_CASE("single-sum four-suit alpha equals the beta pipeline") {
    for (std::uint32_t n = 1; n <= 5; ++n) {
        const auto alpha = alpha_vector_from_beta(beta_polynomial_four_suit(n));
        for (std::uint64_t r = 0; r <= 3ull * n; ++r) {
            CAPTURE(n);
            CAPTURE(r);
            CHECK(alpha_four_suit(n, r) == alpha[r]);
        }
    }
}

TEST_CASE("two-rank closed form") {
    const std::vector<BigInt> k4 = ints({2, 6, 18, 18, 18, 6, 2});
    for (std::uint64_t r = 0; r <= 6; ++r) {
        CHECK(alpha_two_ranks(4, r) == k4[r]);
    }
    CHECK(alpha_two_ranks(2, 0) == 2);
    CHECK(alpha_two_ranks(2, 1) == 2);
    CHECK(alpha_two_ranks(2, 2) == 2);
    CHECK(alpha_two_ranks(1, 0) == 2);
    CHECK_THROWS_AS(alpha_two_ranks(4, 7), std::invalid_argument);
    CHECK_THROWS_AS(alpha_two_ranks(1, 1), std::invalid_argument);
}

TEST_CASE("two-rank closed form equals the general route") {
    for (std::uint32_t k = 1; k <= 7; ++k) {
        const auto general = exact_distribution_general(DeckSpec(k, 2));
        for (std::uint64_t r = 0; r <= 2ull * k - 2; ++r) {
            CAPTURE(k);
            CAPTURE(r);
            CHECK(alpha_two_ranks(k, r) == general.alpha()[r]);
        }
    }
}

TEST_CASE("two-rank distribution is palindromic with top coefficient 2") {
    for (std::uint32_t k = 1; k <= 10; ++k) {
        const std::uint64_t degree = 2ull * k - 2;
        for (std::uint64_t r = 0; r <= degree; ++r) {
            CHECK(alpha_two_ranks(k, r) == alpha_two_ranks(k, degree - r));
        }
        CHECK(alpha_two_ranks(k, degree) == 2);
    }
}

TEST_CASE("dispatch routes agree where they overlap") {
    // k=4, n=2 is reachable by all three routes.
    const auto via_dispatch = exact_distribution(DeckSpec(4, 2));
    const auto via_general = exact_distribution_general(DeckSpec(4, 2));
    CHECK(via_dispatch.alpha() == kExampleAlpha);
    CHECK(via_general.alpha() == kExampleAlpha);

    const auto four_suit_n3 = exact_distribution(DeckSpec(4, 3));
    const auto general_n3 = exact_distribution_general(DeckSpec(4, 3));
    CHECK(four_suit_n3.alpha() == general_n3.alpha());
}

TEST_CASE("distribution invariants over a deck sweep") {
    for (std::uint32_t k = 1; k <= 5; ++k) {
        for (std::uint32_t n = 1; n <= 6; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            const DeckSpec deck(k, n);
            const auto dist = exact_distribution(deck);
            CHECK(dist.total() == count_permutations(deck));
            CHECK(dist.alpha().back() == factorial(n));
            CHECK(dist.mean() == BigRat(k - 1));

            BigRat psum(0);
            for (std::size_t r = 0; r < dist.alpha().size(); ++r) {
                psum += dist.probability(r);
            }
            CHECK(psum == BigRat(1));
        }
    }
}

TEST_CASE("point masses") {
    const auto distinct = exact_distribution(DeckSpec(1, 5));
    CHECK(distinct.alpha() == ints({120}));
    CHECK(distinct.probability(0) == BigRat(1));

    const auto one_rank = exact_distribution(DeckSpec(3, 1));
    CHECK(one_rank.alpha() == ints({0, 0, 1}));
    CHECK(one_rank.probability(2) == BigRat(1));
}

TEST_CASE("Table-1 probabilities at five decimals") {
    const auto dist = exact_distribution(DeckSpec(4, 13));
    CHECK(dist.probability_string(0, 5) == "0.04548");
    CHECK(dist.probability_string(3, 5) == "0.23085");
    CHECK(dist.probability_string(5, 5) == "0.10181");
    CHECK(dist.probability_string(12, 5) == "0.00002");
    CHECK(dist.probability_string(13, 5) == "0.00000");
    // Deep exact checks on the same distribution.
    CHECK(dist.alpha()[0] == BigInt("4184920420968817245135211427730337964623328025600"));
    CHECK(dist.total() == BigInt("92024242230271040357108320801872044844750000000000"));
    CHECK(dist.alpha()[39] == factorial(13));
}

TEST_CASE("maximal match probability") {
    const BigRat standard = max_match_probability(DeckSpec(4, 13));
    CHECK(standard == make_rational(factorial(13) * pow_ui(factorial(4), 13), factorial(52)));
    CHECK(to_scientific_string(standard, 6) == "6.76672e-41");

    CHECK(max_match_probability(DeckSpec(1, 9)) == BigRat(1));
    CHECK(max_match_probability(DeckSpec(2, 2)) == make_rational(BigInt(1), BigInt(3)));
}

TEST_CASE("results are identical across thread counts") {
    const DeckSpec deck(5, 7);
    const auto serial = exact_distribution(deck, 1);
    const auto parallel = exact_distribution(deck, 4);
    CHECK(serial.alpha() == parallel.alpha());

    const auto beta1 = beta_polynomial_four_suit(9, 1);
    const auto beta4 = beta_polynomial_four_suit(9, 4);
    CHECK(beta1 == beta4);
}

TEST_CASE("term ceiling refuses oversized requests") {
    TermLimits tiny;
    tiny.ceiling = 10;
    CHECK_THROWS_AS(exact_distribution(DeckSpec(5, 8), 1, tiny), ResourceLimitError);
    CHECK_THROWS_AS(alpha_four_suit(20, 0, tiny), ResourceLimitError);
    // The closed form needs no enumeration, so the same deck at n=2 is fine.
    CHECK_NOTHROW(exact_distribution(DeckSpec(5, 2), 1, tiny));
}

TEST_CASE("probability rendering precision is caller-chosen") {
    const auto dist = exact_distribution(DeckSpec(4, 2));
    CHECK(dist.probability_string(0, 5) == "0.02857");
    CHECK(dist.probability_string(0, 2) == "0.03");
    CHECK(dist.probability_string(2, 7) == "0.2571429");
}
