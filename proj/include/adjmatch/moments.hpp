#pragma once

#include <cstdint>
#include <vector>

#include "adjmatch/bigint.hpp"
#include "adjmatch/deck.hpp"
#include "adjmatch/exact.hpp"
#include "adjmatch/simulate.hpp"

namespace adjmatch {

// E(M) = k - 1, independent of n.
BigRat expected_matches(const DeckSpec& deck);

// Var(M) = Var(M') = k(k-1)(n-1)/(kn-1). Requires kn >= 2.
BigRat variance_matches(const DeckSpec& deck);

enum class PairKind {
    adjacent,   // |i - j| = 1
    separated,  // |i - j| > 1
};

// E(M_i M_j) for a pair of match indicators of the given kind:
//   adjacent:  (k-1)(k-2) / ((kn-1)(kn-2))
//   separated: ((k-1)(k-2)(k-3) + (k-1)^2(kn-k)) / ((kn-1)(kn-2)(kn-3))
// Requires kn >= 3 (adjacent) or kn >= 4 (separated).
BigRat indicator_product_expectation(const DeckSpec& deck, PairKind kind);

// Cov(M_i, M_j):
//   adjacent:  (k-1)(k-kn) / ((kn-1)^2 (kn-2))        (nonpositive)
//   separated: 2(k-1)(kn-k) / ((kn-1)^2 (kn-2)(kn-3)) (nonnegative)
BigRat covariance(const DeckSpec& deck, PairKind kind);

// P(M' = r) for the binomial surrogate: kn-1 independent Bernoulli trials
// with p = (k-1)/(kn-1). Exact rational.
BigRat binomial_pmf(const DeckSpec& deck, std::uint64_t r);

// e^-lambda lambda^r / r!, computed by incremental ratio from e^-lambda
// (log-space above lambda ~ 700 where e^-lambda underflows).
double poisson_pmf(double lambda, std::uint64_t r);

// A finite probability vector in double precision.
struct ApproxDistribution {
    enum class Kind { binomial, poisson, empirical, exact_rendered };

    Kind kind;
    std::vector<double> probabilities;  // indexed by match count
    double tail_mass = 0.0;             // mass beyond the carried support

    static ApproxDistribution binomial(const DeckSpec& deck);
    // Carries terms through max(min_support, the first index past the mode
    // with pmf < 1e-18); the truncated tail mass is recorded.
    static ApproxDistribution poisson(double lambda, std::size_t min_support);
    static ApproxDistribution from_exact(const ExactDistribution& dist);
    static ApproxDistribution from_simulation(const SimulationResult& result);
};

// Half the L1 distance between the two vectors, padded with zeros to a
// common length. Equals the largest probability gap over any event.
double total_variation(const ApproxDistribution& a, const ApproxDistribution& b);

// Soon's estimate d_TV(M, M') <= C_{k,n} * sum_{i != j} |Cov(M_i, M_j)|
// with C_{k,n} = (1 - p^kn - (1-p)^kn) / (kn p (1-p)).
struct CovarianceReport {
    DeckSpec deck;
    BigRat adjacent_cov;   // <= 0 for k >= 2, n >= 2
    BigRat separated_cov;  // >= 0
    BigRat sum_abs_cov;    // = 4(k-1)(kn-k)/(kn-1)^2
    double soon_constant;  // C_{k,n}
    double soon_bound;     // C_{k,n} * sum_abs_cov
};

// Requires k >= 2 and kn >= 4. The absolute covariance sum is assembled
// from 2(kn-2) adjacent pairs and (kn-2)(kn-3) separated pairs; the two
// pieces are equal and their total telescopes to 4(k-1)(kn-k)/(kn-1)^2.
CovarianceReport soon_bound(const DeckSpec& deck);

}  // namespace adjmatch
