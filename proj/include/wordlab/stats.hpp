#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordlab/generators.hpp"
#include "wordlab/numeric.hpp"
#include "wordlab/quadratic.hpp"

namespace wordlab {

// Exact summary statistics of a rational series.
struct SeriesStats {
    std::size_t count = 0;
    Rat mean;
    Rat median;               // odd count: middle; even: average of the two middles
    Rat variance_sample;      // divide by N-1; zero when N == 1
    Rat variance_population;  // divide by N
};

SeriesStats series_stats(const std::vector<Rat>& xs);

// Pearson correlation, exact: r = sign * sqrt(r_squared) with rational
// r_squared. Zero-variance series use the conventional r = 0.
struct Correlation {
    bool zero_variance = false;
    int sign = 0;
    Rat r_squared;
    std::optional<Rat> exact;  // set when r itself is rational
};

Correlation pearson(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

std::string correlation_decimal(const Correlation& c, int places = 9);
// Decimal of sqrt(variance).
std::string stddev_decimal(const Rat& variance, int places = 9);

// One recomputed statistic compared against a published reference value.
struct StatsReportRow {
    std::string statistic;  // "mean", "median", "std-sample", ...
    std::string series;     // "dens_lambda", "dens_alpha:dens_beta", ...
    std::string recomputed_exact;
    std::string recomputed_decimal;
    std::string reference_decimal;
    bool mismatch = false;  // recomputed differs from reference beyond tolerance
};

struct StatsReport {
    unsigned n_max = 0;
    Rat tolerance;
    std::vector<StatsReportRow> rows;
    std::string note;
};

// Recomputes the density-series statistics for the ternary system and
// compares them against the built-in reference table (which corresponds to
// the index range 0..12). Mismatches are flagged, never patched over.
StatsReport reference_stats_report(const RecursiveSpec& spec, unsigned n_max);

}  // namespace wordlab
