#include "wordlab/stats.hpp"

#include <algorithm>

#include "wordlab/counting.hpp"
#include "wordlab/error.hpp"

namespace wordlab {

SeriesStats series_stats(const std::vector<Rat>& xs) {
    if (xs.empty()) fail_invalid("series_stats: empty series");
    SeriesStats s;
    s.count = xs.size();
    Rat sum(0);
    for (const Rat& x : xs) sum += x;
    s.mean = sum / Rat(static_cast<unsigned long>(xs.size()));
    s.mean.canonicalize();

    std::vector<Rat> sorted = xs;
    std::sort(sorted.begin(), sorted.end());
    std::size_t mid = sorted.size() / 2;
    if (sorted.size() % 2 == 1) {
        s.median = sorted[mid];
    } else {
        s.median = (sorted[mid - 1] + sorted[mid]) / Rat(2);
        s.median.canonicalize();
    }

    Rat ss(0);
    for (const Rat& x : xs) {
        Rat d = x - s.mean;
        ss += d * d;
    }
    ss.canonicalize();
    s.variance_population = ss / Rat(static_cast<unsigned long>(xs.size()));
    s.variance_population.canonicalize();
    if (xs.size() > 1) {
        s.variance_sample = ss / Rat(static_cast<unsigned long>(xs.size() - 1));
        s.variance_sample.canonicalize();
    } else {
        s.variance_sample = 0;
    }
    return s;
}

Correlation pearson(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.empty() || xs.size() != ys.size())
        fail_invalid("pearson: series must be nonempty and equally long");
    Rat n(static_cast<unsigned long>(xs.size()));
    Rat mx(0), my(0);
    for (const Rat& x : xs) mx += x;
    for (const Rat& y : ys) my += y;
    mx /= n;
    my /= n;
    Rat cov(0), vx(0), vy(0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rat dx = xs[i] - mx;
        Rat dy = ys[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    Correlation c;
    if (vx == 0 || vy == 0) {
        c.zero_variance = true;
        c.sign = 0;
        c.r_squared = 0;
        c.exact = Rat(0);
        return c;
    }
    c.sign = sgn(cov);
    c.r_squared = (cov * cov) / (vx * vy);
    c.r_squared.canonicalize();
    if (c.sign == 0) {
        c.exact = Rat(0);
    } else if (is_perfect_square(c.r_squared.get_num()) &&
               is_perfect_square(c.r_squared.get_den())) {
        Rat root = make_rat(isqrt(c.r_squared.get_num()), isqrt(c.r_squared.get_den()));
        c.exact = (c.sign < 0) ? Rat(-root) : root;
    }
    return c;
}

std::string correlation_decimal(const Correlation& c, int places) {
    if (c.exact) return decimal_of_rat(*c.exact, places);
    std::string body = decimal_of_sqrt(c.r_squared, places);
    return (c.sign < 0) ? "-" + body : body;
}

std::string stddev_decimal(const Rat& variance, int places) {
    return decimal_of_sqrt(variance, places);
}

namespace {

// Value of sign * sqrt(v) as an exact quadratic element.
Quad signed_sqrt(const Rat& v, int sign) {
    if (sign == 0 || v == 0) return Quad(Rat(0));
    Rat coeff(sign, v.get_den());
    coeff.canonicalize();
    return Quad::surd(Rat(0), coeff, v.get_num() * v.get_den());
}

std::string signed_sqrt_string(const Rat& v, int sign) {
    if (sign == 0 || v == 0) return "0";
    if (is_perfect_square(v.get_num()) && is_perfect_square(v.get_den())) {
        Rat root = make_rat(isqrt(v.get_num()), isqrt(v.get_den()));
        if (sign < 0) root = -root;
        return rat_to_string(root);
    }
    std::string body = "sqrt(" + rat_to_string(v) + ")";
    return sign < 0 ? "-" + body : body;
}

bool differs_beyond(const Quad& recomputed, const Rat& reference, const Rat& tolerance) {
    Quad diff = recomputed - Quad(reference);
    if (diff.sign() < 0) diff = -diff;
    return (diff - Quad(tolerance)).sign() > 0;
}

struct ReferenceEntry {
    const char* statistic;
    const char* series;
    Rat reference;
};

}  // namespace

StatsReport reference_stats_report(const RecursiveSpec& spec, unsigned n_max) {
    if (spec.seed0.alphabet().size() != 3)
        fail_invalid("reference_stats_report: expects the ternary system");
    std::vector<DensityRecord> series = density_series(spec, n_max);
    const char* names[3] = {"dens_lambda", "dens_alpha", "dens_beta"};
    std::vector<std::vector<Rat>> cols(3);
    for (const DensityRecord& rec : series)
        for (unsigned s = 0; s < 3; ++s) cols[s].push_back(rec.densities[s]);

    StatsReport report;
    report.n_max = n_max;
    report.tolerance = Rat(1, 2000);  // 5e-4
    report.note =
        "recomputed over n = 0.." + std::to_string(n_max) +
        "; reference values correspond to the series over n = 0..12; "
        "mismatch means the recomputed value differs from the reference "
        "beyond 5e-4";

    const Rat ref_mean[3] = {Rat(1, 2), Rat(7, 40), Rat(289, 1000)};
    const Rat ref_median[3] = {Rat(1, 2), Rat(191, 1000), Rat(309, 1000)};
    const Rat ref_std[3] = {Rat(0), Rat(8, 125), Rat(49, 500)};

    auto add_rat_row = [&](const std::string& stat, const char* ser, const Rat& value,
                           const Rat& reference) {
        StatsReportRow row;
        row.statistic = stat;
        row.series = ser;
        row.recomputed_exact = rat_to_string(value);
        row.recomputed_decimal = decimal_of_rat(value);
        row.reference_decimal = decimal_of_rat(reference);
        row.mismatch = differs_beyond(Quad(value), reference, report.tolerance);
        report.rows.push_back(row);
    };
    auto add_sqrt_row = [&](const std::string& stat, const char* ser, const Rat& variance,
                            const Rat& reference) {
        StatsReportRow row;
        row.statistic = stat;
        row.series = ser;
        row.recomputed_exact = signed_sqrt_string(variance, variance == 0 ? 0 : 1);
        row.recomputed_decimal = stddev_decimal(variance);
        row.reference_decimal = decimal_of_rat(reference);
        row.mismatch = differs_beyond(signed_sqrt(variance, 1), reference, report.tolerance);
        report.rows.push_back(row);
    };

    std::vector<SeriesStats> stats;
    for (unsigned s = 0; s < 3; ++s) stats.push_back(series_stats(cols[s]));
    for (unsigned s = 0; s < 3; ++s) add_rat_row("mean", names[s], stats[s].mean, ref_mean[s]);
    for (unsigned s = 0; s < 3; ++s)
        add_rat_row("median", names[s], stats[s].median, ref_median[s]);
    for (unsigned s = 0; s < 3; ++s) {
        add_sqrt_row("std-sample", names[s], stats[s].variance_sample, ref_std[s]);
        add_sqrt_row("std-population", names[s], stats[s].variance_population, ref_std[s]);
    }

    const std::pair<unsigned, unsigned> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
    const Rat ref_corr[3] = {Rat(0), Rat(0), Rat(-9, 10)};
    for (unsigned i = 0; i < 3; ++i) {
        Correlation c = pearson(cols[pairs[i].first], cols[pairs[i].second]);
        StatsReportRow row;
        row.statistic = "corr";
        row.series = std::string(names[pairs[i].first]) + ":" + names[pairs[i].second];
        if (c.exact)
            row.recomputed_exact = rat_to_string(*c.exact);
        else
            row.recomputed_exact = signed_sqrt_string(c.r_squared, c.sign);
        row.recomputed_decimal = correlation_decimal(c);
        row.reference_decimal = decimal_of_rat(ref_corr[i]);
        Quad value = c.exact ? Quad(*c.exact) : signed_sqrt(c.r_squared, c.sign);
        row.mismatch = differs_beyond(value, ref_corr[i], report.tolerance);
        if (c.zero_variance) row.statistic = "corr(zero-variance convention)";
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace wordlab
