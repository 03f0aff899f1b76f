// Acceptance gate: one pass/fail line per criterion, exit code = failures.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "wordlab/bounds.hpp"
#include "wordlab/counting.hpp"
#include "wordlab/generators.hpp"
#include "wordlab/identities.hpp"
#include "wordlab/palindromes.hpp"
#include "wordlab/quadratic.hpp"
#include "wordlab/stats.hpp"
#include "wordlab/thue_morse.hpp"
#include "wordlab/word.hpp"

#ifndef WORDLAB_GOLDEN_DIR
#error "WORDLAB_GOLDEN_DIR must point at the golden corpus"
#endif

using namespace wordlab;

namespace {

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    expect(static_cast<bool>(in), "cannot open " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

Quad abs_quad(const Quad& q) { return q.sign() < 0 ? -q : q; }

std::string subst_golden(std::string args) {
    const std::string key = "{GOLDEN}";
    for (std::size_t p = args.find(key); p != std::string::npos; p = args.find(key))
        args.replace(p, key.size(), WORDLAB_GOLDEN_DIR);
    return args;
}

const StatsReportRow& stats_row(const StatsReport& rep, const std::string& statistic,
                                const std::string& series) {
    for (const StatsReportRow& r : rep.rows)
        if (r.statistic == statistic && r.series == series) return r;
    throw std::runtime_error("missing stats row " + statistic + "/" + series);
}

void criterion1() {
    CliResult r = run_cli("gen --system fibonacci --length 14");
    expect(r.exit_code == 0, "exit " + std::to_string(r.exit_code));
    expect(r.output == "01001010010010\n", "got '" + r.output + "'");
}

void criterion2() {
    const char* alpha[13] = {"0.500000000", "0.000000000", "0.250000000", "0.166666667",
                             "0.200000000", "0.187500000", "0.192307692", "0.190476190",
                             "0.191176471", "0.190909091", "0.191011236", "0.190972222",
                             "0.190987124"};
    const char* beta[13] = {"0.000000000", "0.500000000", "0.250000000", "0.333333333",
                            "0.300000000", "0.312500000", "0.307692308", "0.309523810",
                            "0.308823529", "0.309090909", "0.308988764", "0.309027778",
                            "0.309012876"};
    std::vector<DensityRecord> series = density_series(RecursiveSpec::ternary_y(), 12);
    expect(series.size() == 13, "series size");
    for (unsigned n = 0; n <= 12; ++n) {
        expect(decimal_of_rat(series[n].densities[0]) == "0.500000000",
               "lambda coordinate at n=" + std::to_string(n));
        expect(decimal_of_rat(series[n].densities[1]) == alpha[n],
               "alpha coordinate at n=" + std::to_string(n));
        expect(decimal_of_rat(series[n].densities[2]) == beta[n],
               "beta coordinate at n=" + std::to_string(n));
    }
}

void criterion3() {
    std::vector<CountTableRow> rows = table2_rows(2, 15);
    expect(rows.size() == 14, "row count");
    RecursiveSpec spec = RecursiveSpec::ternary_y();
    for (const CountTableRow& r : rows) {
        CountVector cv = counts_recursive(spec, r.n);
        expect(r.length == cv.total && r.zeros == cv.counts[0] && r.ones == cv.counts[1] &&
                   r.twos == cv.counts[2],
               "row n=" + std::to_string(r.n) + " disagrees with the recurrence");
        expect(r.length == r.zeros + r.ones + r.twos, "row sum at n=" + std::to_string(r.n));
    }
    expect(rows[5].n == 7 && rows[5].length == 42 && rows[5].zeros == 21 &&
               rows[5].ones == 8 && rows[5].twos == 13,
           "pinned row n=7");
    expect(rows[13].n == 15 && rows[13].length == 1974 && rows[13].zeros == 987 &&
               rows[13].ones == 377 && rows[13].twos == 610,
           "pinned row n=15");
}

void criterion4() {
    StatsReport rep = reference_stats_report(RecursiveSpec::ternary_y(), 12);
    expect(!stats_row(rep, "median", "dens_lambda").mismatch, "median lambda flagged");
    expect(!stats_row(rep, "median", "dens_alpha").mismatch, "median alpha flagged");
    expect(!stats_row(rep, "median", "dens_beta").mismatch, "median beta flagged");

    const StatsReportRow& mean_a = stats_row(rep, "mean", "dens_alpha");
    expect(mean_a.mismatch, "mean alpha not flagged");
    expect(mean_a.recomputed_decimal == "0.203231284",
           "mean alpha recomputed " + mean_a.recomputed_decimal);
    expect(stats_row(rep, "mean", "dens_beta").mismatch, "mean beta not flagged");
    expect(!stats_row(rep, "mean", "dens_lambda").mismatch, "mean lambda flagged");

    for (const char* series : {"dens_alpha", "dens_beta"}) {
        expect(stats_row(rep, "std-sample", series).mismatch,
               std::string("std-sample not flagged for ") + series);
        expect(stats_row(rep, "std-population", series).mismatch,
               std::string("std-population not flagged for ") + series);
    }
    const StatsReportRow& std_a = stats_row(rep, "std-population", "dens_alpha");
    expect(std_a.recomputed_decimal.compare(0, 4, "0.10") == 0,
           "std alpha recomputed " + std_a.recomputed_decimal);

    expect(stats_row(rep, "corr(zero-variance convention)", "dens_lambda:dens_alpha")
                   .recomputed_exact == "0",
           "corr(lambda,alpha)");
    expect(stats_row(rep, "corr(zero-variance convention)", "dens_lambda:dens_beta")
                   .recomputed_exact == "0",
           "corr(lambda,beta)");
    const StatsReportRow& corr_ab = stats_row(rep, "corr", "dens_alpha:dens_beta");
    expect(corr_ab.recomputed_exact == "-1" &&
               corr_ab.recomputed_decimal == "-1.000000000" && corr_ab.mismatch,
           "corr(alpha,beta) must be exactly -1 and flagged against -0.9");
}

void criterion5() {
    DensityRecord rec = density_record(RecursiveSpec::ternary_y(), 40);
    std::vector<Quad> limits = limit_densities(RecursiveSpec::ternary_y());
    Quad eps = Quad(make_rat(Int(1), pow10(12)));
    expect((abs_quad(Quad(rec.densities[1]) - limits[1]) - eps).sign() < 0,
           "alpha distance at n=40");
    expect((abs_quad(Quad(rec.densities[2]) - limits[2]) - eps).sign() < 0,
           "beta distance at n=40");
}

void criterion6() {
    for (unsigned k = 1; k <= 20; ++k) {
        TmCounts c = tm_counts(std::uint64_t{1} << k);
        Int half = Int(1) << (k - 1);
        expect(c.zeros == half && c.ones == half,
               "power prefix unbalanced at k=" + std::to_string(k));
    }
    TmBoundsReport rep = tm_bounds_check(std::uint64_t{1} << 20);
    expect(rep.violations.empty(),
           std::to_string(rep.violations.size()) + " sandwich violations");
    Word a = tm_prefix(std::uint64_t{1} << 20, TmGenerator::Recurrence);
    Word b = tm_prefix(std::uint64_t{1} << 20, TmGenerator::Morphism);
    expect(a == b, "generators disagree");
}

void criterion7() {
    Word w = fibonacci_prefix(1000000);
    std::vector<std::uint64_t> lengths = palindromic_prefix_lengths(w);
    const std::uint64_t head[6] = {1, 3, 6, 11, 19, 32};
    expect(lengths.size() >= 6, "too few palindromic prefixes");
    for (std::size_t i = 0; i < 6; ++i)
        expect(lengths[i] == head[i], "prefix length " + std::to_string(i));

    PalindromeDensityReport rep = palindrome_density_check("fibonacci", w, 5);
    Quad bound = Quad::surd(Rat(-1, 2), Rat(1, 2), Int(5));
    Quad dist = abs_quad(Quad(rep.estimate) - bound);
    expect((dist - Quad(Rat(1, 500))).sign() < 0, "estimate too far from the bound");
    expect(rep.verdict == BoundVerdict::Holds, "bound verdict");

    std::vector<Word> corpora = {
        fibonacci_prefix(5000),
        tm_prefix(5000, TmGenerator::Recurrence),
        recursive_prefix(RecursiveSpec::ternary_y(), 5000),
    };
    std::mt19937 rng(7);
    for (unsigned sigma : {2u, 3u}) {
        Alphabet ab = alphabet_sigma(sigma);
        std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
        for (std::uint64_t len : {1u, 2u, 64u, 999u, 5000u}) {
            Word r(ab);
            r.reserve(len);
            for (std::uint64_t i = 0; i < len; ++i) r.push_back(pick(rng));
            corpora.push_back(std::move(r));
        }
    }
    for (const Word& c : corpora)
        expect(palindromic_prefix_lengths(c) == palindromic_prefix_lengths_naive(c),
               "fast scan disagrees with the naive oracle");
}

void criterion8() {
    std::vector<ParamRange> ranges = {
        ParamRange{"m", RangeBound{"", 2}, RangeBound{"", 50}},
        ParamRange{"n", RangeBound{"", 1}, RangeBound{"m", -1}},
    };
    SweepSummary sweep = claim_sweep("docagne-standard", ranges, FibIndexMode::Negafibonacci);
    expect(sweep.cases.size() == 1225, "sweep case count");
    expect(sweep.true_count == 1225 && sweep.false_count == 0 &&
               sweep.undefined_count == 0,
           "control identity has failures");

    ClaimReport p = claim_eval("prop32", {1, 4}, FibIndexMode::Negafibonacci);
    expect(p.lhs && *p.lhs == Rat(-2, 7) && p.rhs && *p.rhs == Rat(2) &&
               p.verdict == ClaimVerdict::False,
           "prop32(1,4)");
    ClaimReport s = claim_eval("safeword-eq2", {4}, FibIndexMode::Negafibonacci);
    expect(s.lhs && *s.lhs == Rat(5) && s.rhs && *s.rhs == Rat(21) &&
               s.verdict == ClaimVerdict::False,
           "safeword-eq2(4)");
    expect(claim_eval("catalan-eq4", {3, 1}, FibIndexMode::Negafibonacci).verdict ==
               ClaimVerdict::True,
           "catalan-eq4(3,1)");
    expect(claim_eval("catalan-eq4", {4, 1}, FibIndexMode::Negafibonacci).verdict ==
               ClaimVerdict::False,
           "catalan-eq4(4,1)");

    std::string args = "id --claim docagne-standard --sweep m=2..50,n=1..m-1 --format csv";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    expect(first.exit_code == 0 && second.exit_code == 0, "sweep exit code");
    expect(first.output == second.output, "sweep output not reproduced byte-identically");
}

void criterion9() {
    RecursiveSpec spec = RecursiveSpec::ternary_y();
    for (unsigned n : {2u, 7u, 12u}) {
        for (LogInterp interp : {LogInterp::RowRatioNaturalLog, LogInterp::RowRatioLog10,
                                 LogInterp::LiteralPowersNaturalLog}) {
            BoundReport rep = log_density_check(spec, n, interp);
            expect(rep.verdict == BoundVerdict::Holds ||
                       rep.verdict == BoundVerdict::Violated,
                   "no verdict at n=" + std::to_string(n));
            expect(!rep.left_decimal.empty() && !rep.right_decimal.empty(),
                   "missing decimals at n=" + std::to_string(n));
        }
    }
    BoundReport a7 = log_density_check(spec, 7, LogInterp::RowRatioNaturalLog);
    expect(a7.right_exact == "ln(21/13)", "right side " + a7.right_exact);
    double rendered = std::strtod(a7.right_decimal.c_str(), nullptr);
    expect(std::fabs(rendered - std::log(42.0 / 26.0)) <= 1e-4,
           "rendered " + a7.right_decimal);
}

void criterion10() {
    std::string manifest = read_file(std::string(WORDLAB_GOLDEN_DIR) + "/manifest.tsv");
    std::istringstream lines(manifest);
    std::string line;
    std::size_t cases = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        expect(tab != std::string::npos, "manifest line lacks a tab");
        std::string name = line.substr(0, tab);
        std::string args = subst_golden(line.substr(tab + 1));
        std::string expected = read_file(std::string(WORDLAB_GOLDEN_DIR) + "/" + name + ".out");
        for (const char* env : {"", "WORDLAB_THREADS=1 ", "WORDLAB_THREADS=4 "}) {
            CliResult r = run_cli(args, env);
            expect(r.exit_code == 0, name + ": exit " + std::to_string(r.exit_code));
            expect(r.output == expected, name + ": output drifted");
        }
        CliResult again = run_cli(args);
        expect(again.output == expected, name + ": second run drifted");
        ++cases;
    }
    expect(cases > 0, "empty manifest");
}

struct Criterion {
    int id;
    const char* label;
    double limit_seconds;  // 0 means the criterion states no limit
    std::function<void()> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "fibonacci word via the CLI", 0.1, criterion1},
        {2, "density series coordinates n=0..12", 1.0, criterion2},
        {3, "letter-count table rows n=2..15", 0.1, criterion3},
        {4, "stats report medians, flagged means and correlations", 1.0, criterion4},
        {5, "density limits at n=40 within 1e-12", 0.1, criterion5},
        {6, "balanced power prefixes and count sandwich up to 2^20", 5.0, criterion6},
        {7, "palindromic prefix density on the 10^6 fibonacci prefix", 10.0, criterion7},
        {8, "identity evaluations and control sweep", 1.0, criterion8},
        {9, "logarithmic growth checker interpretations", 0.0, criterion9},
        {10, "golden corpus deterministic across runs and thread counts", 0.0, criterion10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string problem;
        try {
            c.body();
        } catch (const std::exception& e) {
            problem = e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (problem.empty() && c.limit_seconds > 0 && elapsed >= c.limit_seconds)
            problem = "took " + std::to_string(elapsed) + "s, limit " +
                      std::to_string(c.limit_seconds) + "s";
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3fs", elapsed);
        if (problem.empty()) {
            std::cout << "PASS: criterion " << c.id << " (" << c.label << ") [" << timing
                      << "]\n";
        } else {
            std::cout << "FAIL: criterion " << c.id << " (" << c.label << ") [" << timing
                      << "]: " << problem << "\n";
            ++failures;
        }
    }
    return failures;
}
