#include "adjmatch/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>

#include "adjmatch/decimal.hpp"
#include "adjmatch/errors.hpp"
#include "adjmatch/partition.hpp"

namespace adjmatch {

namespace {

// Weak compositions of n into `parts` slots, visited in a fixed order
// starting from (n, 0, ..., 0). The order is deterministic so that bucket
// sums are reproducible run to run.
template <typename Fn>
void for_each_composition(std::uint32_t n, std::size_t parts, Fn&& fn) {
    std::vector<std::uint32_t> s(parts, 0);
    s[0] = n;
    for (;;) {
        fn(std::as_const(s));
        if (s[parts - 1] == n) break;
        std::size_t i = parts - 2;
        while (s[i] == 0) --i;
        const std::uint32_t tail = s[parts - 1];
        s[parts - 1] = 0;
        --s[i];
        s[i + 1] = tail + 1;
    }
}

void check_term_budget(std::uint32_t n, std::size_t parts, const TermLimits& limits) {
    const BigInt count = binomial(static_cast<std::uint64_t>(n) + parts - 1, parts - 1);
    if (count > BigInt(static_cast<unsigned long>(limits.ceiling))) {
        throw ResourceLimitError(
            "composition space of " + count.get_str() + " terms exceeds ceiling of " +
            std::to_string(limits.ceiling) +
            " (raise the ceiling to proceed; cost grows combinatorially)");
    }
}

// Per-rank gluing pattern data, shared by the general and four-suit routes:
// pattern i forces mu[i] matches and carries a symmetry divisor divisor[i].
struct PatternSet {
    std::vector<std::uint32_t> mu;
    std::vector<BigInt> divisor;

    std::size_t size() const { return mu.size(); }
};

PatternSet general_patterns(std::uint32_t suits) {
    PatternSet ps;
    for (const Partition& p : enumerate_partitions(suits)) {
        ps.mu.push_back(p.glued_matches());
        BigInt d(1);
        for (auto count : p.multiplicity) {
            if (count > 1) d *= factorial(count);
        }
        ps.divisor.push_back(std::move(d));
    }
    return ps;
}

// The five k = 4 patterns in table order: x.x.x.x, xx.x.x, xxx.x, xx.xx,
// xxxx, with divisors 4!, 2!, 1, 2!, 1.
PatternSet four_suit_patterns() {
    PatternSet ps;
    ps.mu = {0, 1, 2, 2, 3};
    for (unsigned long d : {24ul, 2ul, 1ul, 2ul, 1ul}) ps.divisor.emplace_back(d);
    return ps;
}

std::uint64_t forced_matches(const PatternSet& ps, const std::vector<std::uint32_t>& s) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        m += static_cast<std::uint64_t>(s[i]) * ps.mu[i];
    }
    return m;
}

// multinomial(n; s) * (kn - m)! / prod divisor_i^{s_i}, the size of the
// list of arrangements generated by the tally s.
BigInt tally_term(const PatternSet& ps, const std::vector<std::uint32_t>& s,
                  std::uint64_t cards, std::uint64_t m, const BigInt& fact_n) {
    BigInt den(1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] > 0 && ps.divisor[i] != 1) {
            den *= pow_ui(ps.divisor[i], s[i]);
        }
    }
    BigInt term = exact_div(factorial(cards - m), den);
    BigInt mult = fact_n;
    for (auto si : s) {
        if (si > 1) mult = exact_div(mult, factorial(si));
    }
    return term * mult;
}

BigPolynomial beta_polynomial_impl(const PatternSet& ps, std::uint32_t suits,
                                   std::uint32_t ranks, unsigned threads,
                                   const TermLimits& limits) {
    check_term_budget(ranks, ps.size(), limits);
    const std::uint64_t cards = static_cast<std::uint64_t>(suits) * ranks;
    const std::uint64_t degree = static_cast<std::uint64_t>(suits - 1) * ranks;
    const BigInt fact_n = factorial(ranks);
    factorial(cards);  // populate the shared table before workers start

    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, ps.size() > 1 ? ranks + 1 : 1));

    // Worker w owns the first-coordinate values v with v % workers == w.
    // Buckets merge by addition, so the result does not depend on the
    // worker count or schedule.
    std::vector<std::vector<BigInt>> local(workers,
                                           std::vector<BigInt>(degree + 1, BigInt(0)));
    auto run_worker = [&](unsigned w) {
        std::vector<std::uint32_t> s(ps.size(), 0);
        for (std::uint32_t v = w; v <= ranks; v += workers) {
            if (ps.size() == 1) {
                if (v != ranks) continue;
                s[0] = ranks;
                const std::uint64_t m = forced_matches(ps, s);
                local[w][m] += tally_term(ps, s, cards, m, fact_n);
                continue;
            }
            s[0] = v;
            for_each_composition(ranks - v, ps.size() - 1, [&](const auto& rest) {
                std::copy(rest.begin(), rest.end(), s.begin() + 1);
                const std::uint64_t m = forced_matches(ps, s);
                local[w][m] += tally_term(ps, s, cards, m, fact_n);
            });
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

    BigPolynomial beta(degree);
    for (unsigned w = 0; w < workers; ++w) {
        for (std::size_t m = 0; m <= degree; ++m) beta[m] += local[w][m];
    }
    return beta;
}

BigInt beta_single_impl(const PatternSet& ps, std::uint32_t suits, std::uint32_t ranks,
                        std::uint64_t m, const TermLimits& limits) {
    const std::uint64_t degree = static_cast<std::uint64_t>(suits - 1) * ranks;
    if (m > degree) {
        throw std::invalid_argument("beta: m out of range 0..(k-1)n");
    }
    check_term_budget(ranks, ps.size(), limits);
    const std::uint64_t cards = static_cast<std::uint64_t>(suits) * ranks;
    const BigInt fact_n = factorial(ranks);
    BigInt sum(0);
    for_each_composition(ranks, ps.size(), [&](const auto& s) {
        if (forced_matches(ps, s) == m) {
            sum += tally_term(ps, s, cards, m, fact_n);
        }
    });
    return sum;
}

std::vector<BigInt> alpha_via_two_ranks(std::uint32_t k) {
    const std::uint64_t degree = 2ull * k - 2;
    std::vector<BigInt> alpha;
    alpha.reserve(degree + 1);
    for (std::uint64_t r = 0; r <= degree; ++r) alpha.push_back(alpha_two_ranks(k, r));
    return alpha;
}

}  // namespace

ExactDistribution::ExactDistribution(DeckSpec deck, std::vector<BigInt> alpha)
    : deck_(deck), alpha_(std::move(alpha)), total_(count_permutations(deck)) {
    if (alpha_.size() != deck_.max_matches() + 1) {
        throw InternalInconsistencyError("ExactDistribution: wrong support size");
    }
    BigInt sum(0);
    for (const auto& a : alpha_) {
        if (sgn(a) < 0) {
            throw InternalInconsistencyError("ExactDistribution: negative count");
        }
        sum += a;
    }
    if (sum != total_) {
        throw InternalInconsistencyError(
            "ExactDistribution: counts sum to " + sum.get_str() + ", expected " +
            total_.get_str());
    }
}

BigRat ExactDistribution::probability(std::size_t r) const {
    if (r >= alpha_.size()) return BigRat(0);
    return make_rational(alpha_[r], total_);
}

std::string ExactDistribution::probability_string(std::size_t r, unsigned places) const {
    return to_decimal_string(probability(r), places);
}

BigRat ExactDistribution::mean() const {
    BigInt weighted(0);
    for (std::size_t r = 1; r < alpha_.size(); ++r) {
        weighted += alpha_[r] * static_cast<unsigned long>(r);
    }
    return make_rational(weighted, total_);
}

BigRat ExactDistribution::variance() const {
    BigInt weighted_sq(0);
    for (std::size_t r = 1; r < alpha_.size(); ++r) {
        weighted_sq += alpha_[r] * static_cast<unsigned long>(r * r);
    }
    const BigRat second = make_rational(weighted_sq, total_);
    const BigRat mu = mean();
    return second - mu * mu;
}

BigPolynomial beta_polynomial_general(const DeckSpec& deck, unsigned threads,
                                      const TermLimits& limits) {
    return beta_polynomial_impl(general_patterns(deck.suits), deck.suits, deck.ranks,
                                threads, limits);
}

BigInt beta_general(const DeckSpec& deck, std::uint64_t m, const TermLimits& limits) {
    return beta_single_impl(general_patterns(deck.suits), deck.suits, deck.ranks, m,
                            limits);
}

BigPolynomial beta_polynomial_four_suit(std::uint32_t n, unsigned threads,
                                        const TermLimits& limits) {
    if (n < 1) throw std::invalid_argument("beta_polynomial_four_suit: n must be >= 1");
    return beta_polynomial_impl(four_suit_patterns(), 4, n, threads, limits);
}

BigInt beta_four_suit(std::uint32_t n, std::uint64_t m, const TermLimits& limits) {
    if (n < 1) throw std::invalid_argument("beta_four_suit: n must be >= 1");
    return beta_single_impl(four_suit_patterns(), 4, n, m, limits);
}

BigInt alpha_from_beta(const BigPolynomial& beta, std::size_t r) {
    if (beta.coefficients.empty() || r > beta.degree()) {
        throw std::invalid_argument("alpha_from_beta: r exceeds polynomial degree");
    }
    BigInt sum(0);
    BigInt coeff;
    for (std::size_t m = r; m <= beta.degree(); ++m) {
        mpz_bin_uiui(coeff.get_mpz_t(), m, r);
        if ((m - r) % 2 == 0) {
            mpz_addmul(sum.get_mpz_t(), coeff.get_mpz_t(), beta[m].get_mpz_t());
        } else {
            mpz_submul(sum.get_mpz_t(), coeff.get_mpz_t(), beta[m].get_mpz_t());
        }
    }
    if (sgn(sum) < 0) {
        throw InternalInconsistencyError(
            "alpha_from_beta: negative coefficient at r=" + std::to_string(r));
    }
    return sum;
}

std::vector<BigInt> alpha_vector_from_beta(const BigPolynomial& beta) {
    std::vector<BigInt> alpha;
    alpha.reserve(beta.degree() + 1);
    BigInt sum(0);
    for (std::size_t r = 0; r <= beta.degree(); ++r) {
        alpha.push_back(alpha_from_beta(beta, r));
        sum += alpha.back();
    }
    // A(1) = B(0): the signed transform must redistribute beta_0 exactly.
    if (sum != beta[0]) {
        throw InternalInconsistencyError("alpha_vector_from_beta: sum != beta_0");
    }
    return alpha;
}

BigInt alpha_four_suit(std::uint32_t n, std::uint64_t r, const TermLimits& limits) {
    if (r > 3ull * n) {
        throw std::invalid_argument("alpha_four_suit: r out of range 0..3n");
    }
    check_term_budget(n, 5, limits);
    const PatternSet ps = four_suit_patterns();
    const BigInt fact_n = factorial(n);
    BigInt sum(0);
    BigInt coeff;
    for_each_composition(n, 5, [&](const auto& s) {
        const std::uint64_t m = forced_matches(ps, s);
        if (m < r) return;
        const BigInt term = tally_term(ps, s, 4ull * n, m, fact_n);
        mpz_bin_uiui(coeff.get_mpz_t(), m, r);
        // sign is (-1)^(t+w-r); u and v contribute even amounts to m.
        if ((s[1] + s[4] + r) % 2 == 0) {
            mpz_addmul(sum.get_mpz_t(), coeff.get_mpz_t(), term.get_mpz_t());
        } else {
            mpz_submul(sum.get_mpz_t(), coeff.get_mpz_t(), term.get_mpz_t());
        }
    });
    if (sgn(sum) < 0) {
        throw InternalInconsistencyError("alpha_four_suit: negative result");
    }
    return sum;
}

BigInt alpha_two_ranks(std::uint32_t k, std::uint64_t r) {
    if (k < 1 || r > 2ull * k - 2) {
        throw std::invalid_argument("alpha_two_ranks: r out of range 0..2k-2");
    }
    const std::int64_t ell = static_cast<std::int64_t>(r / 2);
    const std::int64_t first = static_cast<std::int64_t>(k) - ell - 1;
    if (first < 0) return BigInt(0);
    const BigInt b1 = binomial(k - 1, static_cast<std::uint64_t>(first));
    if (r % 2 == 0) {
        return 2 * b1 * b1;
    }
    if (first < 1) return BigInt(0);
    const BigInt b2 = binomial(k - 1, static_cast<std::uint64_t>(first - 1));
    return 2 * b1 * b2;
}

ExactDistribution exact_distribution(const DeckSpec& deck, unsigned threads,
                                     const TermLimits& limits) {
    if (deck.ranks == 2) {
        return ExactDistribution(deck, alpha_via_two_ranks(deck.suits));
    }
    if (deck.suits == 4) {
        const BigPolynomial beta = beta_polynomial_four_suit(deck.ranks, threads, limits);
        return ExactDistribution(deck, alpha_vector_from_beta(beta));
    }
    return exact_distribution_general(deck, threads, limits);
}

ExactDistribution exact_distribution_general(const DeckSpec& deck, unsigned threads,
                                             const TermLimits& limits) {
    const BigPolynomial beta = beta_polynomial_general(deck, threads, limits);
    return ExactDistribution(deck, alpha_vector_from_beta(beta));
}

BigRat max_match_probability(const DeckSpec& deck) {
    const BigInt favorable = factorial(deck.ranks) * pow_ui(factorial(deck.suits), deck.ranks);
    return make_rational(favorable, factorial(deck.card_count()));
}

}  // namespace adjmatch
