#include "adjmatch/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "adjmatch/combinatorics.hpp"
#include "adjmatch/errors.hpp"

namespace adjmatch {

BigRat expected_matches(const DeckSpec& deck) {
    return BigRat(deck.suits - 1);
}

BigRat variance_matches(const DeckSpec& deck) {
    const std::uint64_t cards = deck.card_count();
    if (cards < 2) {
        throw std::invalid_argument("variance_matches: needs at least 2 cards");
    }
    const BigInt num = BigInt(deck.suits) * (deck.suits - 1) * (deck.ranks - 1);
    return make_rational(num, BigInt(cards - 1));
}

BigRat indicator_product_expectation(const DeckSpec& deck, PairKind kind) {
    const std::uint64_t cards = deck.card_count();
    const BigInt k(deck.suits);
    if (kind == PairKind::adjacent) {
        if (cards < 3) {
            throw std::invalid_argument("adjacent pair expectation: needs kn >= 3");
        }
        // Three consecutive cards of one rank.
        return make_rational((k - 1) * (k - 2), BigInt(cards - 1) * (cards - 2));
    }
    if (cards < 4) {
        throw std::invalid_argument("separated pair expectation: needs kn >= 4");
    }
    // Either both matches in one rank (impossible for k <= 3, where the
    // first product vanishes) or in two different ranks.
    const BigInt num = (k - 1) * (k - 2) * (k - 3) +
                       (k - 1) * (k - 1) * BigInt(cards - deck.suits);
    return make_rational(num, BigInt(cards - 1) * (cards - 2) * (cards - 3));
}

BigRat covariance(const DeckSpec& deck, PairKind kind) {
    const std::uint64_t cards = deck.card_count();
    const BigInt k(deck.suits);
    const BigInt cm1(cards - 1);
    if (kind == PairKind::adjacent) {
        if (cards < 3) {
            throw std::invalid_argument("covariance: adjacent pair needs kn >= 3");
        }
        return make_rational((k - 1) * (k - BigInt(cards)), cm1 * cm1 * (cards - 2));
    }
    if (cards < 4) {
        throw std::invalid_argument("covariance: separated pair needs kn >= 4");
    }
    return make_rational(2 * (k - 1) * BigInt(cards - deck.suits),
                         cm1 * cm1 * (cards - 2) * (cards - 3));
}

BigRat binomial_pmf(const DeckSpec& deck, std::uint64_t r) {
    const std::uint64_t trials = deck.card_count() - 1;
    if (r > trials) {
        throw std::invalid_argument("binomial_pmf: r out of range 0..kn-1");
    }
    // C(kn-1, r) (k-1)^r (kn-k)^(kn-1-r) / (kn-1)^(kn-1); 0^0 = 1 covers
    // the degenerate single-card and one-rank decks.
    const BigInt num = binomial(trials, r) * pow_ui(BigInt(deck.suits - 1), r) *
                       pow_ui(BigInt(deck.card_count() - deck.suits), trials - r);
    return make_rational(num, pow_ui(BigInt(trials), trials));
}

double poisson_pmf(double lambda, std::uint64_t r) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("poisson_pmf: lambda must be > 0");
    }
    if (lambda > 700.0) {
        // e^-lambda underflows; stay in log space.
        return std::exp(-lambda + static_cast<double>(r) * std::log(lambda) -
                        std::lgamma(static_cast<double>(r) + 1.0));
    }
    double p = std::exp(-lambda);
    for (std::uint64_t i = 1; i <= r; ++i) {
        p *= lambda / static_cast<double>(i);
    }
    return p;
}

ApproxDistribution ApproxDistribution::binomial(const DeckSpec& deck) {
    const std::uint64_t trials = deck.card_count() - 1;
    ApproxDistribution out{Kind::binomial, {}, 0.0};
    out.probabilities.reserve(trials + 1);
    for (std::uint64_t r = 0; r <= trials; ++r) {
        out.probabilities.push_back(binomial_pmf(deck, r).get_d());
    }
    return out;
}

ApproxDistribution ApproxDistribution::poisson(double lambda, std::size_t min_support) {
    ApproxDistribution out{Kind::poisson, {}, 0.0};
    double sum = 0.0;
    for (std::size_t r = 0;; ++r) {
        const double p = poisson_pmf(lambda, r);
        out.probabilities.push_back(p);
        sum += p;
        if (r >= min_support && static_cast<double>(r) > lambda && p < 1e-18) break;
    }
    out.tail_mass = std::max(0.0, 1.0 - sum);
    return out;
}

ApproxDistribution ApproxDistribution::from_exact(const ExactDistribution& dist) {
    ApproxDistribution out{Kind::exact_rendered, {}, 0.0};
    out.probabilities.reserve(dist.alpha().size());
    for (std::size_t r = 0; r < dist.alpha().size(); ++r) {
        out.probabilities.push_back(dist.probability(r).get_d());
    }
    return out;
}

ApproxDistribution ApproxDistribution::from_simulation(const SimulationResult& result) {
    ApproxDistribution out{Kind::empirical, {}, 0.0};
    out.probabilities.reserve(result.histogram.size());
    for (std::size_t r = 0; r < result.histogram.size(); ++r) {
        out.probabilities.push_back(result.frequency(r));
    }
    return out;
}

double total_variation(const ApproxDistribution& a, const ApproxDistribution& b) {
    const std::size_t len = std::max(a.probabilities.size(), b.probabilities.size());
    double sum = 0.0;
    for (std::size_t r = 0; r < len; ++r) {
        const double pa = r < a.probabilities.size() ? a.probabilities[r] : 0.0;
        const double pb = r < b.probabilities.size() ? b.probabilities[r] : 0.0;
        sum += std::abs(pa - pb);
    }
    return sum / 2.0;
}

CovarianceReport soon_bound(const DeckSpec& deck) {
    if (deck.suits < 2 || deck.card_count() < 4) {
        throw std::invalid_argument("soon_bound: needs k >= 2 and kn >= 4");
    }
    const std::uint64_t cards = deck.card_count();
    const BigRat adj = covariance(deck, PairKind::adjacent);
    const BigRat sep = covariance(deck, PairKind::separated);

    // 2(kn-2) adjacent pairs and (kn-2)(kn-3) separated pairs.
    BigRat sum = BigInt(2 * (cards - 2)) * abs(adj) +
                 BigInt(cards - 2) * BigInt(cards - 3) * sep;
    const BigRat closed = make_rational(4 * BigInt(deck.suits - 1) * (cards - deck.suits),
                                        BigInt(cards - 1) * (cards - 1));
    if (sum != closed) {
        throw InternalInconsistencyError("soon_bound: covariance sum mismatch");
    }

    const double p = static_cast<double>(deck.suits - 1) / static_cast<double>(cards - 1);
    const double kn = static_cast<double>(cards);
    // (1-p)^kn via exp/log1p keeps precision for very large decks.
    const double constant =
        (1.0 - std::pow(p, kn) - std::exp(kn * std::log1p(-p))) / (kn * p * (1.0 - p));

    return CovarianceReport{deck, adj, sep, sum, constant, constant * sum.get_d()};
}

}  // namespace adjmatch
