#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adjmatch/bigint.hpp"
#include "adjmatch/combinatorics.hpp"
#include "adjmatch/deck.hpp"
#include "adjmatch/polynomial.hpp"

namespace adjmatch {

// Enumeration budget for the composition-space traversals. The number of
// weak compositions of n over the p(k) partitions is C(n+p(k)-1, p(k)-1);
// requests above the ceiling are refused with ResourceLimitError rather
// than left to run for hours.
struct TermLimits {
    std::uint64_t ceiling = 100'000'000;
};

// Exact distribution of the match count M: alpha[r] arrangements have
// exactly r matches, out of `total` = (kn)!/(k!)^n.
class ExactDistribution {
public:
    ExactDistribution(DeckSpec deck, std::vector<BigInt> alpha);

    const DeckSpec& deck() const { return deck_; }
    const std::vector<BigInt>& alpha() const { return alpha_; }
    const BigInt& total() const { return total_; }
    std::size_t max_matches() const { return alpha_.size() - 1; }

    // P(M = r) as an exact rational; r past the support yields 0.
    BigRat probability(std::size_t r) const;
    std::string probability_string(std::size_t r, unsigned places) const;

    // First two moments, exact.
    BigRat mean() const;
    BigRat variance() const;

private:
    DeckSpec deck_;
    std::vector<BigInt> alpha_;
    BigInt total_;
};

// beta[m]: inclusion-exclusion overcount, the weighted number of
// arrangements carrying a designated set of m forced matches. Computed by
// summing, over all ways (s_pi) to assign a gluing partition to each of
// the n ranks with total forced matches m,
//
//   multinomial(n; (s_pi)) * (kn - m)! / prod_pi prod_i (pi_i!)^{s_pi}.
//
// beta_polynomial_general traverses the composition space once and buckets
// every term by m, yielding the whole polynomial B(x).
BigPolynomial beta_polynomial_general(const DeckSpec& deck, unsigned threads = 1,
                                      const TermLimits& limits = {});
BigInt beta_general(const DeckSpec& deck, std::uint64_t m, const TermLimits& limits = {});

// Four-suit specialization: direct sum over (s,t,u,v,w) with s+t+u+v+w = n
// and t+2u+2v+3w = m of multinomial(n;s,t,u,v,w) * (4n-m)! / (4!^s 2!^t 2!^v).
BigPolynomial beta_polynomial_four_suit(std::uint32_t n, unsigned threads = 1,
                                        const TermLimits& limits = {});
BigInt beta_four_suit(std::uint32_t n, std::uint64_t m, const TermLimits& limits = {});

// Inclusion-exclusion: alpha_r = sum_{m>=r} (-1)^{m-r} C(m,r) beta_m,
// i.e. A(x) = B(x-1). Negative results signal a bug upstream and throw.
BigInt alpha_from_beta(const BigPolynomial& beta, std::size_t r);
std::vector<BigInt> alpha_vector_from_beta(const BigPolynomial& beta);

// Four-suit single-sum form: the alternating sum over compositions
// (s,t,u,v,w) of n with t+2u+2v+3w >= r, evaluated independently of the
// beta route. Accepts n = 0 (empty deck), where alpha_0 = 1.
BigInt alpha_four_suit(std::uint32_t n, std::uint64_t r, const TermLimits& limits = {});

// Two-rank closed form (n = 2, any k >= 1):
//   alpha_{2l}   = 2 C(k-1, k-l-1)^2
//   alpha_{2l+1} = 2 C(k-1, k-l-1) C(k-1, k-l-2)
// with out-of-range binomials evaluating to 0.
BigInt alpha_two_ranks(std::uint32_t k, std::uint64_t r);

// Full distribution. Dispatch: the n = 2 closed form when ranks == 2, the
// four-suit specialization when suits == 4, the general pipeline otherwise.
ExactDistribution exact_distribution(const DeckSpec& deck, unsigned threads = 1,
                                     const TermLimits& limits = {});

// General pipeline regardless of deck shape; the specializations are tested
// against this route.
ExactDistribution exact_distribution_general(const DeckSpec& deck, unsigned threads = 1,
                                             const TermLimits& limits = {});

// P(M = (k-1)n) = n! (k!)^n / (kn)!, the probability of the maximal
// match count.
BigRat max_match_probability(const DeckSpec& deck);

}  // namespace adjmatch
