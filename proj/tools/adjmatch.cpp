// adjmatch: exact and approximate distributions of adjacent same-rank
// matches in a shuffled deck, plus simulation and a brute-force self-check.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adjmatch/combinatorics.hpp"
#include "adjmatch/decimal.hpp"
#include "adjmatch/errors.hpp"
#include "adjmatch/exact.hpp"
#include "adjmatch/moments.hpp"
#include "adjmatch/oracle.hpp"
#include "adjmatch/simulate.hpp"

namespace {

using nlohmann::ordered_json;
using namespace adjmatch;

struct CommonOptions {
    std::uint32_t suits = 0;
    std::uint32_t ranks = 0;
    unsigned precision = 5;
    std::string format = "csv";
    unsigned threads = 0;  // 0 = all cores
    std::string out_path;
};

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

TermLimits limits_from_env() {
    TermLimits limits;
    if (const char* raw = std::getenv("ADJMATCH_TERM_CEILING")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0) {
            throw std::invalid_argument("ADJMATCH_TERM_CEILING must be a positive integer");
        }
        limits.ceiling = v;
    }
    return limits;
}

// Writes to --out when given, stdout otherwise.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string format_fixed(double v, unsigned places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", static_cast<int>(places), v);
    return buf;
}

double parse_rendered(const std::string& s) { return std::stod(s); }

// ---------------------------------------------------------------- exact --

int cmd_exact(const CommonOptions& opt) {
    const DeckSpec deck(opt.suits, opt.ranks);
    const ExactDistribution dist =
        exact_distribution(deck, resolve_threads(opt.threads), limits_from_env());
    OutputTarget target(opt.out_path);
    std::ostream& os = target.stream();

    const std::string mean_str = to_decimal_string(dist.mean(), opt.precision);
    const std::string var_str =
        to_decimal_string(deck.card_count() >= 2 ? dist.variance() : BigRat(0), opt.precision);

    if (opt.format == "json") {
        ordered_json doc;
        doc["deck"] = {{"suits", deck.suits}, {"ranks", deck.ranks}};
        doc["rows"] = ordered_json::array();
        for (std::size_t r = 0; r < dist.alpha().size(); ++r) {
            doc["rows"].push_back({
                {"r", r},
                {"alpha", dist.alpha()[r].get_str()},
                {"p_exact", parse_rendered(dist.probability_string(r, opt.precision))},
            });
        }
        doc["summary"] = {
            {"total", dist.total().get_str()},
            {"mean", dist.mean().get_d()},
            {"variance", deck.card_count() >= 2 ? dist.variance().get_d() : 0.0},
        };
        os << doc.dump(2) << '\n';
        return 0;
    }

    os << "r,alpha,probability\n";
    for (std::size_t r = 0; r < dist.alpha().size(); ++r) {
        os << r << ',' << dist.alpha()[r].get_str() << ','
           << dist.probability_string(r, opt.precision) << '\n';
    }
    os << "total," << dist.total().get_str() << ",\n";
    os << "mean,," << mean_str << '\n';
    os << "variance,," << var_str << '\n';
    return 0;
}

// -------------------------------------------------------------- compare --

ApproxDistribution poisson_for_deck(const DeckSpec& deck) {
    if (deck.suits == 1) {
        // lambda = k-1 = 0 degenerates to a point mass at zero.
        return ApproxDistribution{ApproxDistribution::Kind::poisson, {1.0}, 0.0};
    }
    return ApproxDistribution::poisson(static_cast<double>(deck.suits - 1),
                                       deck.max_matches());
}

int cmd_compare(const CommonOptions& opt) {
    const DeckSpec deck(opt.suits, opt.ranks);
    const ExactDistribution dist =
        exact_distribution(deck, resolve_threads(opt.threads), limits_from_env());
    const ApproxDistribution exact_probs = ApproxDistribution::from_exact(dist);
    const ApproxDistribution binom = ApproxDistribution::binomial(deck);
    const ApproxDistribution poisson = poisson_for_deck(deck);

    const double dtv_binomial = total_variation(exact_probs, binom);
    const double dtv_poisson = total_variation(exact_probs, poisson);
    std::optional<CovarianceReport> report;
    if (deck.suits >= 2 && deck.card_count() >= 4) {
        report = soon_bound(deck);
    }

    const std::size_t rows = deck.card_count();  // r = 0 .. kn-1
    auto poisson_at = [&](std::size_t r) {
        return r < poisson.probabilities.size() ? poisson.probabilities[r] : 0.0;
    };

    OutputTarget target(opt.out_path);
    std::ostream& os = target.stream();

    if (opt.format == "json") {
        ordered_json doc;
        doc["deck"] = {{"suits", deck.suits}, {"ranks", deck.ranks}};
        doc["rows"] = ordered_json::array();
        for (std::size_t r = 0; r < rows; ++r) {
            const BigInt alpha = r < dist.alpha().size() ? dist.alpha()[r] : BigInt(0);
            doc["rows"].push_back({
                {"r", r},
                {"alpha", alpha.get_str()},
                {"p_exact", parse_rendered(dist.probability_string(r, opt.precision))},
                {"p_binomial",
                 parse_rendered(to_decimal_string(binomial_pmf(deck, r), opt.precision))},
                {"p_poisson", parse_rendered(format_fixed(poisson_at(r), opt.precision))},
            });
        }
        doc["summary"] = {
            {"total", dist.total().get_str()},
            {"mean", dist.mean().get_d()},
            {"variance", deck.card_count() >= 2 ? dist.variance().get_d() : 0.0},
            {"dtv_binomial", dtv_binomial},
            {"dtv_poisson", dtv_poisson},
        };
        if (report) {
            doc["summary"]["sum_abs_cov"] = report->sum_abs_cov.get_d();
            doc["summary"]["soon_constant"] = report->soon_constant;
            doc["summary"]["soon_bound"] = report->soon_bound;
        }
        os << doc.dump(2) << '\n';
        return 0;
    }

    os << "r,p_exact,p_binomial,p_poisson\n";
    for (std::size_t r = 0; r < rows; ++r) {
        os << r << ',' << dist.probability_string(r, opt.precision) << ','
           << to_decimal_string(binomial_pmf(deck, r), opt.precision) << ','
           << format_fixed(poisson_at(r), opt.precision) << '\n';
    }
    os << "dtv_binomial," << format_double(dtv_binomial) << ",,\n";
    os << "dtv_poisson," << format_double(dtv_poisson) << ",,\n";
    if (report) {
        os << "sum_abs_cov," << format_double(report->sum_abs_cov.get_d()) << ",,\n";
        os << "soon_constant," << format_double(report->soon_constant) << ",,\n";
        os << "soon_bound," << format_double(report->soon_bound) << ",,\n";
    }
    return 0;
}

// ------------------------------------------------------------- simulate --

int cmd_simulate(const CommonOptions& opt, std::uint64_t trials, std::uint64_t seed) {
    const DeckSpec deck(opt.suits, opt.ranks);
    const SimulationResult result =
        simulate(deck, trials, seed, resolve_threads(opt.threads));
    OutputTarget target(opt.out_path);
    std::ostream& os = target.stream();

    if (opt.format == "json") {
        ordered_json doc;
        doc["deck"] = {{"suits", deck.suits}, {"ranks", deck.ranks}};
        doc["trials"] = result.trials;
        doc["seed"] = result.seed;
        doc["workers"] = result.workers;
        doc["rows"] = ordered_json::array();
        for (std::size_t r = 0; r < result.histogram.size(); ++r) {
            doc["rows"].push_back({{"matches", r},
                                   {"count", result.histogram[r]},
                                   {"frequency", result.frequency(r)}});
        }
        doc["summary"] = {{"empirical_mean", result.empirical_mean}};
        os << doc.dump(2) << '\n';
    } else {
        write_histogram_csv(os, result);
    }

    std::ostream& summary = target.to_file() ? std::cout : std::cerr;
    summary << "empirical_mean " << format_double(result.empirical_mean) << '\n';
    return 0;
}

// ---------------------------------------------------------------- check --

struct CheckOutcome {
    DeckSpec deck;
    std::uint64_t arrangements = 0;
    bool ok = false;
    std::string detail;
};

CheckOutcome check_deck(const DeckSpec& deck, const TermLimits& limits) {
    CheckOutcome outcome{deck, 0, true, ""};
    const ExactDistribution computed = exact_distribution(deck, 1, limits);
    const ExactDistribution truth = brute_force_alpha(deck);
    outcome.arrangements = truth.total().get_ui();

    for (std::size_t r = 0; r < computed.alpha().size(); ++r) {
        if (computed.alpha()[r] != truth.alpha()[r]) {
            outcome.ok = false;
            outcome.detail = "r=" + std::to_string(r) + " exact=" +
                             computed.alpha()[r].get_str() + " oracle=" +
                             truth.alpha()[r].get_str();
            return outcome;
        }
    }
    if (computed.mean() != expected_matches(deck)) {
        outcome.ok = false;
        outcome.detail = "mean mismatch";
        return outcome;
    }
    if (deck.card_count() >= 2 && computed.variance() != variance_matches(deck)) {
        outcome.ok = false;
        outcome.detail = "variance mismatch";
        return outcome;
    }
    if (computed.alpha().back() != factorial(deck.ranks)) {
        outcome.ok = false;
        outcome.detail = "top coefficient != n!";
        return outcome;
    }
    return outcome;
}

int cmd_check(std::uint64_t max_cards, unsigned threads) {
    if (max_cards < 1 || max_cards > kDefaultOracleCardCap) {
        throw std::invalid_argument("check: --max-cards must be in 1.." +
                                    std::to_string(kDefaultOracleCardCap));
    }
    const TermLimits limits = limits_from_env();

    std::vector<DeckSpec> decks;
    for (std::uint32_t k = 1; k <= max_cards; ++k) {
        for (std::uint32_t n = 1; k * static_cast<std::uint64_t>(n) <= max_cards; ++n) {
            decks.emplace_back(k, n);
        }
    }

    std::vector<CheckOutcome> outcomes(decks.size(), CheckOutcome{DeckSpec(1, 1), 0, false, ""});
    const unsigned workers =
        std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(decks.size()));
    auto run_worker = [&](unsigned w) {
        for (std::size_t i = w; i < decks.size(); i += workers) {
            outcomes[i] = check_deck(decks[i], limits);
        }
    };
    if (workers <= 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& t : pool) t.join();
    }

    bool all_ok = true;
    for (const auto& o : outcomes) {
        if (o.ok) {
            std::cout << "k=" << o.deck.suits << " n=" << o.deck.ranks
                      << " cards=" << o.deck.card_count()
                      << " arrangements=" << o.arrangements << " ok\n";
        } else {
            all_ok = false;
            std::cout << "k=" << o.deck.suits << " n=" << o.deck.ranks << " MISMATCH "
                      << o.detail << '\n';
        }
    }
    std::cout << "check: " << outcomes.size() << " decks, "
              << (all_ok ? "all ok" : "MISMATCHES FOUND") << '\n';
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distribution of adjacent same-rank matches in a shuffled deck"};
    app.require_subcommand(1);

    CommonOptions opt;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::uint64_t max_cards = 10;

    auto add_deck_flags = [&](CLI::App* cmd) {
        cmd->add_option("--suits", opt.suits, "number of suits (copies per rank)")
            ->required();
        cmd->add_option("--ranks", opt.ranks, "number of ranks")->required();
        cmd->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
        cmd->add_option("--out", opt.out_path, "write the table to this file");
    };
    auto add_table_flags = [&](CLI::App* cmd) {
        cmd->add_option("--precision", opt.precision, "decimal places for probabilities")
            ->check(CLI::Range(1u, 50u));
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* exact = app.add_subcommand("exact", "exact match-count distribution");
    add_deck_flags(exact);
    add_table_flags(exact);

    CLI::App* compare =
        app.add_subcommand("compare", "exact vs binomial and Poisson approximations");
    add_deck_flags(compare);
    add_table_flags(compare);

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo shuffle histogram");
    add_deck_flags(simulate_cmd);
    add_table_flags(simulate_cmd);
    simulate_cmd->add_option("--trials", trials, "number of shuffles")
        ->check(CLI::Range(std::uint64_t(1), std::uint64_t(1) << 40));
    simulate_cmd->add_option("--seed", seed, "generator seed");

    CLI::App* check = app.add_subcommand("check", "exact pipeline vs brute-force oracle");
    check->add_option("--max-cards", max_cards, "check every deck with up to this many cards");
    check->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (exact->parsed()) return cmd_exact(opt);
        if (compare->parsed()) return cmd_compare(opt);
        if (simulate_cmd->parsed()) return cmd_simulate(opt, trials, seed);
        if (check->parsed()) return cmd_check(max_cards, opt.threads);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
