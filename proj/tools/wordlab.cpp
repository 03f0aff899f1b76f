#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wordlab/bounds.hpp"
#include "wordlab/counting.hpp"
#include "wordlab/error.hpp"
#include "wordlab/generators.hpp"
#include "wordlab/identities.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/palindromes.hpp"
#include "wordlab/quadratic.hpp"
#include "wordlab/stats.hpp"
#include "wordlab/sturmian.hpp"
#include "wordlab/thue_morse.hpp"
#include "wordlab/verdict.hpp"
#include "wordlab/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wordlab;

struct GlobalOpts {
    std::string format = "text";
    std::string out_path;
    bool no_timing = false;
};

void add_common_options(CLI::App* sub, GlobalOpts& g) {
    sub->add_option("--format", g.format, "Output format")->capture_default_str();
    sub->add_option("--out", g.out_path, "Write output to a file instead of stdout");
    sub->add_flag("--no-timing", g.no_timing, "Omit elapsed-time fields from reports");
}

void require_format(const GlobalOpts& g, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (g.format == a) return;
    fail_invalid("format '" + g.format + "' is not supported by this subcommand");
}

void write_output(const GlobalOpts& g, const std::string& data) {
    if (g.out_path.empty()) {
        std::fwrite(data.data(), 1, data.size(), stdout);
        return;
    }
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) fail_resource("cannot open output file " + g.out_path);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    f.flush();
    if (!f) fail_resource("cannot write output file " + g.out_path);
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// Parses a word literal, inferring the smallest alphabet that covers it.
Word parse_word_literal(const std::string& text) {
    if (text.empty()) fail_invalid("word literal must be nonempty");
    Alphabet probe(36);
    unsigned max_symbol = 0;
    for (char c : text) {
        int s = probe.symbol(c);
        if (s < 0) fail_parse(std::string("word literal: bad glyph '") + c + "'");
        max_symbol = std::max(max_symbol, static_cast<unsigned>(s));
    }
    return Word::parse(alphabet_sigma(std::max(2u, max_symbol + 1)), text);
}

// ---------------------------------------------------------------- sources

struct SourceOpts {
    std::string system;
    std::string word_literal;
    std::string morphism_file;
    unsigned seed = 0;
    std::uint64_t length = 0;
    std::string tm_generator = "recurrence";
    std::uint64_t budget = kDefaultSymbolBudget;
};

TmGenerator parse_tm_generator(const std::string& name) {
    if (name == "recurrence") return TmGenerator::Recurrence;
    if (name == "morphism") return TmGenerator::Morphism;
    fail_invalid("unknown Thue-Morse generator '" + name + "' (recurrence|morphism)");
}

Word materialize_source(const SourceOpts& s, std::string& label) {
    if (!s.word_literal.empty()) {
        label = "literal";
        return parse_word_literal(s.word_literal);
    }
    if (!s.morphism_file.empty()) {
        label = "morphism-file";
        Morphism m = Morphism::parse_file(s.morphism_file);
        return fixed_point_prefix(m, s.seed, s.length);
    }
    if (s.system == "fibonacci") {
        label = "fibonacci";
        return fibonacci_prefix(s.length);
    }
    if (s.system == "tm") {
        label = "thue-morse";
        return tm_prefix(s.length, parse_tm_generator(s.tm_generator));
    }
    if (s.system == "y") {
        label = "ternary-y";
        return recursive_prefix(RecursiveSpec::ternary_y(), s.length, s.budget);
    }
    fail_invalid("unknown system '" + s.system + "' (fibonacci|tm|y)");
}

// ---------------------------------------------------------------- reports

void bound_reports_csv(const std::vector<BoundReport>& reports, std::string& out) {
    out += "claim,params,interpretation,left_exact,right_exact,left_decimal,right_decimal,"
           "verdict\n";
    for (const BoundReport& r : reports) {
        out += r.claim + "," + r.params + "," + r.interpretation + "," + r.left_exact +
               "," + r.right_exact + "," + r.left_decimal + "," + r.right_decimal + "," +
               bound_verdict_name(r.verdict) + "\n";
    }
}

ordered_json bound_report_json(const BoundReport& r) {
    ordered_json j;
    j["claim"] = r.claim;
    j["params"] = r.params;
    j["interpretation"] = r.interpretation;
    j["left_exact"] = r.left_exact;
    j["right_exact"] = r.right_exact;
    j["left_decimal"] = r.left_decimal;
    j["right_decimal"] = r.right_decimal;
    j["verdict"] = bound_verdict_name(r.verdict);
    j["note"] = r.note;
    return j;
}

void bound_reports_text(const std::vector<BoundReport>& reports, std::string& out) {
    for (const BoundReport& r : reports) {
        out += r.claim + " [" + r.interpretation + "] (" + r.params + "): " + r.left_exact +
               " <= " + r.right_exact + " is " + bound_verdict_name(r.verdict) + " (left " +
               r.left_decimal + ", right " + r.right_decimal + ")\n";
    }
}

// --------------------------------------------------------------------- gen

struct GenOpts {
    SourceOpts source;
    bool has_length = false;
    unsigned index = 0;
    bool has_index = false;
    unsigned blocks = 0;
    bool has_blocks = false;
};

void run_gen(const GenOpts& o, const GlobalOpts& g, std::string& out) {
    require_format(g, {"text", "json"});
    int modes = int(o.has_length) + int(o.has_index) + int(o.has_blocks);
    if (modes != 1) fail_invalid("gen needs exactly one of --length, --index, --blocks");
    Word w(alphabet_sigma(2));
    std::string label;
    if (o.has_length) {
        w = materialize_source(o.source, label);
    } else if (!o.source.morphism_file.empty() || o.source.system != "y") {
        fail_invalid("--index and --blocks apply to --system y only");
    } else if (o.has_index) {
        label = "ternary-y";
        w = recursive_word(RecursiveSpec::ternary_y(), o.index, o.source.budget);
    } else {
        label = "ternary-y";
        w = recursive_blocks_prefix(RecursiveSpec::ternary_y(), o.blocks, o.source.budget);
    }
    if (g.format == "text") {
        out += w.str();
        out += "\n";
        return;
    }
    ordered_json j;
    j["source"] = label;
    j["length"] = w.size();
    j["word"] = w.str();
    out += dump_json(j);
}

// -------------------------------------------------------------------- dens

struct DensOpts {
    std::string system = "y";
    unsigned n_max = 12;
    bool limits = false;
    bool log_bound = false;
    unsigned n = 0;
    bool has_n = false;
    std::string interp = "all";
};

const char* dens_series_name(unsigned symbol) {
    switch (symbol) {
        case 0: return "dens_lambda";
        case 1: return "dens_alpha";
        case 2: return "dens_beta";
    }
    return "dens";
}

void run_dens(const DensOpts& o, const GlobalOpts& g, std::string& out) {
    if (o.system != "y") fail_invalid("dens supports --system y only");
    RecursiveSpec spec = RecursiveSpec::ternary_y();

    if (o.log_bound) {
        require_format(g, {"text", "csv", "json"});
        if (!o.has_n) fail_invalid("--log-bound needs --n");
        std::vector<LogInterp> interps;
        if (o.interp == "A" || o.interp == "all") interps.push_back(LogInterp::RowRatioNaturalLog);
        if (o.interp == "B" || o.interp == "all") interps.push_back(LogInterp::RowRatioLog10);
        if (o.interp == "C" || o.interp == "all")
            interps.push_back(LogInterp::LiteralPowersNaturalLog);
        if (interps.empty()) fail_invalid("unknown interpretation '" + o.interp + "' (A|B|C|all)");
        std::vector<BoundReport> reports;
        for (LogInterp i : interps) reports.push_back(log_density_check(spec, o.n, i));
        if (g.format == "csv") {
            bound_reports_csv(reports, out);
        } else if (g.format == "json") {
            ordered_json j;
            j["reports"] = ordered_json::array();
            for (const BoundReport& r : reports) j["reports"].push_back(bound_report_json(r));
            out += dump_json(j);
        } else {
            bound_reports_text(reports, out);
        }
        return;
    }

    if (o.limits) {
        require_format(g, {"text", "csv", "json"});
        std::vector<Quad> limits = limit_densities(spec);
        if (g.format == "csv") {
            out += "series,exact,decimal\n";
            for (unsigned s = 0; s < limits.size(); ++s)
                out += std::string(dens_series_name(s)) + "," + limits[s].exact_string() +
                       "," + limits[s].decimal() + "\n";
        } else if (g.format == "json") {
            ordered_json j;
            j["limits"] = ordered_json::array();
            for (unsigned s = 0; s < limits.size(); ++s) {
                ordered_json row;
                row["series"] = dens_series_name(s);
                row["exact"] = limits[s].exact_string();
                row["decimal"] = limits[s].decimal();
                j["limits"].push_back(row);
            }
            out += dump_json(j);
        } else {
            for (unsigned s = 0; s < limits.size(); ++s)
                out += std::string(dens_series_name(s)) + " -> " + limits[s].exact_string() +
                       " = " + limits[s].decimal() + "\n";
        }
        return;
    }

    require_format(g, {"text", "csv", "json", "plot-csv"});
    std::vector<DensityRecord> series = density_series(spec, o.n_max);
    if (g.format == "plot-csv") {
        out += "x,y,series\n";
        for (const DensityRecord& rec : series)
            for (unsigned s = 0; s < 3; ++s)
                out += std::to_string(rec.n) + "," + decimal_of_rat(rec.densities[s]) + "," +
                       dens_series_name(s) + "\n";
        return;
    }
    if (g.format == "csv" || g.format == "json") {
        std::vector<std::vector<std::string>> rows;
        for (const DensityRecord& rec : series) {
            std::vector<std::string> row;
            row.push_back(std::to_string(rec.n));
            row.push_back(rec.total.get_str());
            for (unsigned s = 0; s < 3; ++s) row.push_back(rec.counts[s].get_str());
            for (unsigned s = 0; s < 3; ++s) row.push_back(decimal_of_rat(rec.densities[s]));
            for (unsigned s = 0; s < 3; ++s) row.push_back(rat_to_string(rec.densities[s]));
            rows.push_back(std::move(row));
        }
        const char* cols[] = {"n",          "L",           "lambda",
                              "alpha",      "beta",        "dens_lambda",
                              "dens_alpha", "dens_beta",   "dens_lambda_exact",
                              "dens_alpha_exact", "dens_beta_exact"};
        if (g.format == "csv") {
            out += "n,L,lambda,alpha,beta,dens_lambda,dens_alpha,dens_beta,"
                   "dens_lambda_exact,dens_alpha_exact,dens_beta_exact\n";
            for (const auto& row : rows) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    if (i) out += ",";
                    out += row[i];
                }
                out += "\n";
            }
        } else {
            ordered_json j;
            j["rows"] = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json obj;
                for (std::size_t i = 0; i < row.size(); ++i) obj[cols[i]] = row[i];
                j["rows"].push_back(obj);
            }
            out += dump_json(j);
        }
        return;
    }
    for (const DensityRecord& rec : series) {
        out += "n=" + std::to_string(rec.n) + " L=" + rec.total.get_str();
        const char* names[] = {" lambda=", " alpha=", " beta="};
        for (unsigned s = 0; s < 3; ++s) out += names[s] + rec.counts[s].get_str();
        out += " dens=(";
        for (unsigned s = 0; s < 3; ++s) {
            if (s) out += ", ";
            out += decimal_of_rat(rec.densities[s]);
        }
        out += ")\n";
    }
}

// ------------------------------------------------------------------- stats

void run_stats(unsigned n_max, const GlobalOpts& g, std::string& out) {
    require_format(g, {"text", "csv", "json"});
    StatsReport rep = reference_stats_report(RecursiveSpec::ternary_y(), n_max);
    if (g.format == "csv") {
        out += "statistic,series,recomputed_exact,recomputed_decimal,reference_decimal,"
               "mismatch\n";
        for (const StatsReportRow& r : rep.rows)
            out += r.statistic + "," + r.series + "," + r.recomputed_exact + "," +
                   r.recomputed_decimal + "," + r.reference_decimal + "," +
                   (r.mismatch ? "true" : "false") + "\n";
        return;
    }
    if (g.format == "json") {
        ordered_json j;
        j["n_max"] = std::to_string(rep.n_max);
        j["tolerance"] = rat_to_string(rep.tolerance);
        j["rows"] = ordered_json::array();
        for (const StatsReportRow& r : rep.rows) {
            ordered_json row;
            row["statistic"] = r.statistic;
            row["series"] = r.series;
            row["recomputed_exact"] = r.recomputed_exact;
            row["recomputed_decimal"] = r.recomputed_decimal;
            row["reference_decimal"] = r.reference_decimal;
            row["mismatch"] = r.mismatch ? "true" : "false";
            j["rows"].push_back(row);
        }
        j["note"] = rep.note;
        out += dump_json(j);
        return;
    }
    for (const StatsReportRow& r : rep.rows) {
        out += r.statistic + "(" + r.series + ") recomputed " + r.recomputed_decimal +
               " [" + r.recomputed_exact + "] vs reference " + r.reference_decimal +
               (r.mismatch ? "  MISMATCH" : "") + "\n";
    }
    out += "note: " + rep.note + "\n";
}

// ------------------------------------------------------------------- table

void run_table(unsigned lo, unsigned hi, const GlobalOpts& g, std::string& out) {
    require_format(g, {"text", "csv", "json", "plot-csv"});
    std::vector<CountTableRow> rows = table2_rows(lo, hi);
    if (g.format == "plot-csv") {
        out += "x,y,series\n";
        for (const CountTableRow& r : rows) {
            out += std::to_string(r.n) + "," + r.zeros.get_str() + ",lambda\n";
            out += std::to_string(r.n) + "," + r.ones.get_str() + ",alpha\n";
            out += std::to_string(r.n) + "," + r.twos.get_str() + ",beta\n";
        }
        return;
    }
    if (g.format == "csv" || g.format == "json") {
        if (g.format == "csv") {
            out += "n,L,lambda,alpha,beta\n";
            for (const CountTableRow& r : rows)
                out += std::to_string(r.n) + "," + r.length.get_str() + "," +
                       r.zeros.get_str() + "," + r.ones.get_str() + "," + r.twos.get_str() +
                       "\n";
        } else {
            ordered_json j;
            j["rows"] = ordered_json::array();
            for (const CountTableRow& r : rows) {
                ordered_json row;
                row["n"] = std::to_string(r.n);
                row["L"] = r.length.get_str();
                row["lambda"] = r.zeros.get_str();
                row["alpha"] = r.ones.get_str();
                row["beta"] = r.twos.get_str();
                j["rows"].push_back(row);
            }
            out += dump_json(j);
        }
        return;
    }
    for (const CountTableRow& r : rows)
        out += "n=" + std::to_string(r.n) + " L=" + r.length.get_str() +
               " lambda=" + r.zeros.get_str() + " alpha=" + r.ones.get_str() +
               " beta=" + r.twos.get_str() + "\n";
}

// ---------------------------------------------------------------------- tm

struct TmOpts {
    std::uint64_t counts_n = 0;
    bool has_counts = false;
    std::uint64_t n_max = 0;
    bool has_n_max = false;
};

void run_tm(const TmOpts& o, const GlobalOpts& g, std::string& out) {
    if (int(o.has_counts) + int(o.has_n_max) != 1)
        fail_invalid("tm needs exactly one of --counts, --n-max");
    if (o.has_counts) {
        require_format(g, {"text", "csv", "json"});
        TmCounts c = tm_counts(o.counts_n);
        if (g.format == "csv") {
            out += "n,zeros,ones\n";
            out += std::to_string(c.n) + "," + c.zeros.get_str() + "," + c.ones.get_str() +
                   "\n";
        } else if (g.format == "json") {
            ordered_json j;
            j["n"] = std::to_string(c.n);
            j["zeros"] = c.zeros.get_str();
            j["ones"] = c.ones.get_str();
            out += dump_json(j);
        } else {
            out += "n=" + std::to_string(c.n) + " zeros=" + c.zeros.get_str() +
                   " ones=" + c.ones.get_str() + "\n";
        }
        return;
    }
    require_format(g, {"text", "json"});
    TmBoundsReport rep = tm_bounds_check(o.n_max);
    if (g.format == "json") {
        ordered_json j;
        j["n_max"] = rep.n_max;
        j["first_checked"] = rep.first_checked;
        j["violations"] = rep.violations;
        j["power_of_two_checks"] = rep.power_of_two_checks;
        j["complement_blocks"] = rep.complement_blocks;
        if (!g.no_timing) j["elapsed_seconds"] = rep.elapsed_seconds;
        j["note"] = rep.note;
        out += dump_json(j);
        return;
    }
    out += "n_max=" + std::to_string(rep.n_max) + "\n";
    out += "checked n in [" + std::to_string(rep.first_checked) + ", " +
           std::to_string(rep.n_max) + "]\n";
    out += "violations=" + std::to_string(rep.violations.size());
    if (!rep.violations.empty()) {
        out += " at";
        for (std::uint64_t v : rep.violations) out += " " + std::to_string(v);
    }
    out += "\n";
    out += "power_of_two_checks=" + std::to_string(rep.power_of_two_checks) + "\n";
    out += "complement_blocks=" + std::to_string(rep.complement_blocks) + "\n";
    if (!g.no_timing)
        out += "elapsed_seconds=" + std::to_string(rep.elapsed_seconds) + "\n";
    out += "note: " + rep.note + "\n";
}

// ---------------------------------------------------------------- sturmian

struct SturmianOpts {
    std::string alpha;
    std::string beta = "0";
    std::string variant = "floor";
    std::uint64_t length = 0;
    bool has_length = false;
    std::string cf;
    long j = 0;
    bool has_j = false;
    std::string target;
    bool match_fibonacci = false;
};

MechanicalVariant parse_variant(const std::string& name) {
    if (name == "floor") return MechanicalVariant::Floor;
    if (name == "ceil") return MechanicalVariant::Ceil;
    fail_invalid("unknown variant '" + name + "' (floor|ceil)");
}

void run_sturmian(const SturmianOpts& o, const GlobalOpts& g, std::string& out) {
    require_format(g, {"text", "json"});
    int modes = int(!o.alpha.empty()) + int(!o.cf.empty()) +
                int(!o.target.empty() || o.match_fibonacci);
    if (modes != 1)
        fail_invalid("sturmian needs exactly one of --alpha, --cf, --target/--match-fibonacci");

    if (!o.alpha.empty()) {
        if (!o.has_length) fail_invalid("--alpha needs --length");
        QuadraticSlope alpha = QuadraticSlope::parse(o.alpha);
        Intercept beta = Intercept::parse(o.beta);
        MechanicalVariant variant = parse_variant(o.variant);
        Word w = mechanical_word(alpha, beta, o.length, variant);
        if (g.format == "text") {
            out += w.str() + "\n";
            return;
        }
        ordered_json j;
        j["alpha"] = alpha.to_string();
        j["beta"] = beta.to_string();
        j["variant"] = mechanical_variant_name(variant);
        j["length"] = w.size();
        j["word"] = w.str();
        out += dump_json(j);
        return;
    }

    if (!o.cf.empty()) {
        if (!o.has_j) fail_invalid("--cf needs --j");
        CFExpansion cf = CFExpansion::parse(o.cf);
        Word w = cf_word(cf, o.j);
        if (g.format == "text") {
            out += w.str() + "\n";
            return;
        }
        ordered_json j;
        j["cf"] = o.cf;
        j["j"] = o.j;
        j["length"] = w.size();
        j["word"] = w.str();
        out += dump_json(j);
        return;
    }

    Word target(alphabet_sigma(2));
    std::string label;
    if (o.match_fibonacci) {
        std::uint64_t len = o.has_length ? o.length : 20;
        target = fibonacci_prefix(len);
        label = "fibonacci";
    } else {
        target = Word::parse(alphabet_sigma(2), o.target);
        label = "literal";
    }
    std::vector<SlopeCandidate> grid = standard_candidate_grid();
    std::vector<SlopeCandidate> matches = slope_match_search(target, grid);
    if (g.format == "text") {
        out += "target(" + label + ", length " + std::to_string(target.size()) +
               "): " + std::to_string(matches.size()) + " of " +
               std::to_string(grid.size()) + " conventions match\n";
        for (const SlopeCandidate& c : matches)
            out += "alpha=" + c.alpha.to_string() + " beta=" + c.beta.to_string() +
                   " variant=" + mechanical_variant_name(c.variant) + "\n";
        return;
    }
    ordered_json j;
    j["target_source"] = label;
    j["target_length"] = target.size();
    j["target"] = target.str();
    j["candidates"] = grid.size();
    j["matches"] = ordered_json::array();
    for (const SlopeCandidate& c : matches) {
        ordered_json m;
        m["alpha"] = c.alpha.to_string();
        m["beta"] = c.beta.to_string();
        m["variant"] = mechanical_variant_name(c.variant);
        j["matches"].push_back(m);
    }
    out += dump_json(j);
}

// --------------------------------------------------------------------- pal

struct PalOpts {
    SourceOpts source;
    std::size_t tail = 5;
    bool bounds = false;
};

void run_pal(const PalOpts& o, const GlobalOpts& g, std::string& out) {
    std::string label;
    Word w = materialize_source(o.source, label);
    if (o.bounds) {
        require_format(g, {"text", "csv", "json"});
        std::vector<BoundReport> reports = interior_density_bounds(w, o.tail);
        if (g.format == "csv") {
            bound_reports_csv(reports, out);
        } else if (g.format == "json") {
            ordered_json j;
            j["source"] = label;
            j["reports"] = ordered_json::array();
            for (const BoundReport& r : reports) j["reports"].push_back(bound_report_json(r));
            out += dump_json(j);
        } else {
            bound_reports_text(reports, out);
        }
        return;
    }

    require_format(g, {"text", "json"});
    PalindromeDensityReport rep = palindrome_density_check(label, w, o.tail);
    Quad margin = rep.bound - Quad(rep.estimate);
    constexpr std::size_t kMaxListed = 64;
    if (g.format == "json") {
        ordered_json j;
        j["source"] = rep.source;
        j["horizon"] = rep.horizon;
        j["count"] = rep.lengths.size();
        std::vector<std::uint64_t> listed = rep.lengths;
        if (listed.size() > kMaxListed) {
            listed.resize(kMaxListed);
            j["lengths_truncated"] = true;
        }
        j["lengths"] = listed;
        j["tail"] = rep.tail;
        j["estimate_exact"] = rat_to_string(rep.estimate);
        j["estimate_decimal"] = decimal_of_rat(rep.estimate);
        j["bound_exact"] = rep.bound.exact_string();
        j["bound_decimal"] = rep.bound.decimal();
        j["margin_decimal"] = margin.decimal();
        j["verdict"] = bound_verdict_name(rep.verdict);
        j["note"] = rep.note;
        out += dump_json(j);
        return;
    }
    out += "source=" + rep.source + " horizon=" + std::to_string(rep.horizon) + "\n";
    out += "palindromic prefix lengths (" + std::to_string(rep.lengths.size()) + "):";
    for (std::size_t i = 0; i < rep.lengths.size() && i < kMaxListed; ++i)
        out += " " + std::to_string(rep.lengths[i]);
    if (rep.lengths.size() > kMaxListed) out += " ...";
    out += "\n";
    out += "tail=" + std::to_string(rep.tail) + " estimate=" + rat_to_string(rep.estimate) +
           " = " + decimal_of_rat(rep.estimate) + "\n";
    out += "bound=" + rep.bound.exact_string() + " = " + rep.bound.decimal() +
           " margin=" + margin.decimal() + "\n";
    out += "verdict: " + std::string(bound_verdict_name(rep.verdict)) + "\n";
    out += "note: " + rep.note + "\n";
}

// ---------------------------------------------------------------------- id

struct IdOpts {
    long fib_n = 0;
    bool has_fib = false;
    unsigned long binom_n = 0;
    bool has_binom = false;
    bool list = false;
    std::string claim;
    std::string eval;
    std::string sweep;
    std::string fib_mode = "negafibonacci";
};

FibIndexMode parse_fib_mode(const std::string& name) {
    if (name == "negafibonacci") return FibIndexMode::Negafibonacci;
    if (name == "absolute") return FibIndexMode::AbsoluteValue;
    fail_invalid("unknown --fib-mode '" + name + "' (negafibonacci|absolute)");
}

long parse_long_token(const std::string& token, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        fail_parse(what + ": '" + token + "' is not an integer");
    }
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

// Accepts "7", "m-2", "m+3", or a bare earlier parameter name.
RangeBound parse_range_bound(const std::string& token,
                             const std::vector<std::string>& earlier) {
    if (token.empty()) fail_parse("sweep bound: empty token");
    bool numeric = token.find_first_not_of("0123456789+-") == std::string::npos;
    if (numeric) return RangeBound{"", parse_long_token(token, "sweep bound")};
    for (const std::string& name : earlier) {
        if (token == name) return RangeBound{name, 0};
        if (token.size() > name.size() && token.compare(0, name.size(), name) == 0) {
            char op = token[name.size()];
            if (op == '+' || op == '-')
                return RangeBound{name,
                                  parse_long_token(token.substr(name.size()), "sweep bound")};
        }
    }
    fail_parse("sweep bound '" + token + "' is neither a number nor an earlier parameter");
}

// "n=1..2,k-offset=3..4" in the claim's declared parameter order.
std::vector<ParamRange> parse_sweep_ranges(const ClaimInfo& info, const std::string& text) {
    std::vector<std::string> tokens = split_on(text, ',');
    if (tokens.size() != info.param_names.size())
        fail_invalid("sweep for " + info.id + " needs ranges for " +
                     std::to_string(info.param_names.size()) + " parameters");
    std::vector<ParamRange> ranges;
    std::vector<std::string> earlier;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& declared = info.param_names[i];
        std::size_t eq = tokens[i].find('=');
        if (eq == std::string::npos)
            fail_parse("sweep range '" + tokens[i] + "' must look like name=lo..hi");
        std::string name = tokens[i].substr(0, eq);
        std::string body = tokens[i].substr(eq + 1);
        bool offset_form = false;
        const std::string suffix = "-offset";
        if (name.size() > suffix.size() &&
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
            offset_form = true;
            name = name.substr(0, name.size() - suffix.size());
        }
        if (name != declared)
            fail_invalid("sweep parameter '" + name + "' does not match declared '" +
                         declared + "' of " + info.id);
        std::size_t dots = body.find("..");
        if (dots == std::string::npos)
            fail_parse("sweep range '" + tokens[i] + "' must use lo..hi");
        std::string lo_tok = body.substr(0, dots);
        std::string hi_tok = body.substr(dots + 2);
        ParamRange range;
        range.name = declared;
        if (offset_form) {
            if (earlier.empty())
                fail_invalid("offset range needs an earlier parameter to offset from");
            range.lo = RangeBound{earlier.back(),
                                  parse_long_token(lo_tok, "sweep bound")};
            range.hi = RangeBound{earlier.back(),
                                  parse_long_token(hi_tok, "sweep bound")};
        } else {
            range.lo = parse_range_bound(lo_tok, earlier);
            range.hi = parse_range_bound(hi_tok, earlier);
        }
        ranges.push_back(range);
        earlier.push_back(declared);
    }
    return ranges;
}

std::vector<long> parse_eval_params(const ClaimInfo& info, const std::string& text) {
    std::vector<std::string> tokens = split_on(text, ',');
    if (tokens.size() != info.param_names.size())
        fail_invalid("eval for " + info.id + " needs " +
                     std::to_string(info.param_names.size()) + " parameters");
    std::vector<long> values;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::size_t eq = tokens[i].find('=');
        if (eq == std::string::npos)
            fail_parse("eval parameter '" + tokens[i] + "' must look like name=value");
        std::string name = tokens[i].substr(0, eq);
        if (name != info.param_names[i])
            fail_invalid("eval parameter '" + name + "' does not match declared '" +
                         info.param_names[i] + "' of " + info.id);
        values.push_back(parse_long_token(tokens[i].substr(eq + 1), "eval parameter"));
    }
    return values;
}

std::string claim_side_string(const std::optional<Rat>& side) {
    return side ? rat_to_string(*side) : std::string();
}

void claim_reports_csv(const std::vector<ClaimReport>& reports, std::string& out) {
    out += "claim,params,lhs,rhs,equal\n";
    for (const ClaimReport& r : reports)
        out += r.claim + "," + claim_params_string(r.params) + "," +
               claim_side_string(r.lhs) + "," + claim_side_string(r.rhs) + "," +
               claim_verdict_name(r.verdict) + "\n";
}

ordered_json claim_report_json(const ClaimReport& r) {
    ordered_json j;
    j["claim"] = r.claim;
    j["params"] = claim_params_string(r.params);
    j["lhs"] = claim_side_string(r.lhs);
    j["rhs"] = claim_side_string(r.rhs);
    j["equal"] = claim_verdict_name(r.verdict);
    j["note"] = r.note;
    return j;
}

void claim_report_text(const ClaimReport& r, std::string& out) {
    out += r.claim + "(" + claim_params_string(r.params) + "): lhs=" +
           (r.lhs ? rat_to_string(*r.lhs) : "undefined") + " rhs=" +
           (r.rhs ? rat_to_string(*r.rhs) : "undefined") + " -> " +
           claim_verdict_name(r.verdict);
    if (!r.note.empty()) out += " (" + r.note + ")";
    out += "\n";
}

void run_id(const IdOpts& o, const GlobalOpts& g, std::string& out) {
    int modes = int(o.has_fib) + int(o.has_binom) + int(o.list) + int(!o.claim.empty());
    if (modes != 1)
        fail_invalid("id needs exactly one of --fib, --central-binomial, --list, --claim");
    FibIndexMode mode = parse_fib_mode(o.fib_mode);

    if (o.has_fib) {
        require_format(g, {"text", "json"});
        Int v = fib(o.fib_n);
        if (g.format == "json") {
            ordered_json j;
            j["n"] = std::to_string(o.fib_n);
            j["value"] = v.get_str();
            out += dump_json(j);
        } else {
            out += v.get_str() + "\n";
        }
        return;
    }
    if (o.has_binom) {
        require_format(g, {"text", "json"});
        Int v = central_binomial(o.binom_n);
        if (g.format == "json") {
            ordered_json j;
            j["n"] = std::to_string(o.binom_n);
            j["value"] = v.get_str();
            out += dump_json(j);
        } else {
            out += v.get_str() + "\n";
        }
        return;
    }
    if (o.list) {
        require_format(g, {"text", "json"});
        if (g.format == "json") {
            ordered_json j = ordered_json::array();
            for (const ClaimInfo& info : claim_registry()) {
                ordered_json c;
                c["id"] = info.id;
                c["params"] = info.param_names;
                c["statement"] = info.statement;
                c["domain"] = info.domain;
                j.push_back(c);
            }
            out += dump_json(j);
        } else {
            for (const ClaimInfo& info : claim_registry()) {
                out += info.id + "(";
                for (std::size_t i = 0; i < info.param_names.size(); ++i) {
                    if (i) out += ",";
                    out += info.param_names[i];
                }
                out += "): " + info.statement + "  [" + info.domain + "]\n";
            }
        }
        return;
    }

    const ClaimInfo& info = claim_info(o.claim);
    if (int(!o.eval.empty()) + int(!o.sweep.empty()) != 1)
        fail_invalid("--claim needs exactly one of --eval, --sweep");
    require_format(g, {"text", "csv", "json"});

    if (!o.eval.empty()) {
        ClaimReport rep = claim_eval(info.id, parse_eval_params(info, o.eval), mode);
        if (g.format == "csv") {
            claim_reports_csv({rep}, out);
        } else if (g.format == "json") {
            out += dump_json(claim_report_json(rep));
        } else {
            claim_report_text(rep, out);
        }
        return;
    }

    SweepSummary summary = claim_sweep(info.id, parse_sweep_ranges(info, o.sweep), mode);
    if (g.format == "csv") {
        claim_reports_csv(summary.cases, out);
        return;
    }
    if (g.format == "json") {
        ordered_json j;
        j["claim"] = summary.claim;
        ordered_json s;
        s["true"] = std::to_string(summary.true_count);
        s["false"] = std::to_string(summary.false_count);
        s["undefined"] = std::to_string(summary.undefined_count);
        s["total"] = std::to_string(summary.cases.size());
        j["summary"] = s;
        j["cases"] = ordered_json::array();
        for (const ClaimReport& r : summary.cases) j["cases"].push_back(claim_report_json(r));
        out += dump_json(j);
        return;
    }
    out += summary.claim + ": " + std::to_string(summary.cases.size()) + " cases, " +
           std::to_string(summary.true_count) + " true, " +
           std::to_string(summary.false_count) + " false, " +
           std::to_string(summary.undefined_count) + " undefined\n";
    for (const ClaimReport& r : summary.cases) claim_report_text(r, out);
}

// ------------------------------------------------------------------- thm51

struct Thm51Opts {
    std::string word;
    std::string mode = "symbol-value";
    std::size_t start = 0;
};

void run_thm51(const Thm51Opts& o, const GlobalOpts& g, std::string& out) {
    require_format(g, {"text", "json"});
    TailDensityMode mode;
    if (o.mode == "symbol-value")
        mode = TailDensityMode::SymbolValue;
    else if (o.mode == "frequency")
        mode = TailDensityMode::Frequency;
    else
        fail_invalid("unknown --mode '" + o.mode + "' (symbol-value|frequency)");
    Word w = parse_word_literal(o.word);
    PairedSubwordReport rep = paired_subword_report(w, mode, o.start);
    if (g.format == "json") {
        ordered_json j;
        j["word"] = rep.word;
        j["doubled"] = rep.doubled;
        j["interior"] = rep.interior;
        j["doubled_interior"] = rep.doubled_interior;
        j["mode"] = o.mode;
        j["start"] = rep.start_index;
        j["terms"] = ordered_json::array();
        for (const PairedSubwordTerm& t : rep.terms) {
            ordered_json term;
            term["label"] = t.label;
            term["defined"] = t.defined;
            term["exact"] = t.value_exact;
            term["decimal"] = t.value_decimal;
            term["note"] = t.note;
            j["terms"].push_back(term);
        }
        j["constant_exact"] = rep.constant_exact;
        j["constant_decimal"] = rep.constant_decimal;
        j["verdict"] = bound_verdict_name(rep.verdict);
        j["note"] = rep.note;
        out += dump_json(j);
        return;
    }
    out += "word: " + rep.word + "\n";
    out += "doubled: " + rep.doubled + "\n";
    out += "interior: " + rep.interior + "\n";
    out += "doubled interior: " + rep.doubled_interior + "\n";
    out += "mode: " + o.mode + " start: " + std::to_string(rep.start_index) + "\n";
    for (const PairedSubwordTerm& t : rep.terms) {
        if (t.defined) {
            out += t.label + " = " + t.value_exact + " (" + t.value_decimal + ")";
            if (!t.note.empty()) out += "  [" + t.note + "]";
            out += "\n";
        } else {
            out += t.label + " = undefined (" + t.note + ")\n";
        }
    }
    out += "2/phi1 = " + rep.constant_exact + " (" + rep.constant_decimal + ")\n";
    out += "verdict: " + std::string(bound_verdict_name(rep.verdict)) + "\n";
    out += "note: " + rep.note + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wordlab: exact laboratory for recursively defined infinite words"};
    app.require_subcommand(1);
    GlobalOpts g;

    GenOpts gen_opts;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate words and prefixes");
    gen_cmd->add_option("--system", gen_opts.source.system, "fibonacci|tm|y")
        ->default_val("fibonacci");
    gen_cmd->add_option("--length", gen_opts.source.length, "Prefix length");
    gen_cmd->add_option("--index", gen_opts.index, "Emit the whole block word w_n (y only)");
    gen_cmd->add_option("--blocks", gen_opts.blocks,
                        "Emit w_2...w_{n-1} concatenated (y only)");
    gen_cmd->add_option("--morphism-file", gen_opts.source.morphism_file,
                        "Fixed point of a morphism from a rules file");
    gen_cmd->add_option("--seed", gen_opts.source.seed, "Seed symbol for --morphism-file");
    gen_cmd->add_option("--generator", gen_opts.source.tm_generator,
                        "recurrence|morphism (tm only)");
    gen_cmd->add_option("--budget", gen_opts.source.budget, "Symbol budget");
    add_common_options(gen_cmd, g);

    DensOpts dens_opts;
    CLI::App* dens_cmd = app.add_subcommand("dens", "Letter densities of the ternary system");
    dens_cmd->add_option("--system", dens_opts.system, "y");
    dens_cmd->add_option("--n-max", dens_opts.n_max, "Last index of the series")
        ->default_val(12u);
    dens_cmd->add_flag("--limits", dens_opts.limits, "Print the exact limit densities");
    dens_cmd->add_flag("--log-bound", dens_opts.log_bound,
                       "Check the logarithmic growth bound");
    dens_cmd->add_option("--n", dens_opts.n, "Index for --log-bound");
    dens_cmd->add_option("--interp", dens_opts.interp, "A|B|C|all for --log-bound");
    add_common_options(dens_cmd, g);

    unsigned stats_n_max = 12;
    CLI::App* stats_cmd =
        app.add_subcommand("stats", "Recomputed series statistics versus the reference table");
    stats_cmd->add_option("--n-max", stats_n_max, "Last index of the series")
        ->default_val(12u);
    add_common_options(stats_cmd, g);

    unsigned table_lo = 2, table_hi = 15;
    CLI::App* table_cmd = app.add_subcommand("table", "Exact letter-count table rows");
    table_cmd->add_option("--lo", table_lo, "First index")->default_val(2u);
    table_cmd->add_option("--hi", table_hi, "Last index")->default_val(15u);
    add_common_options(table_cmd, g);

    TmOpts tm_opts;
    CLI::App* tm_cmd = app.add_subcommand("tm", "Thue-Morse counts and bound sweeps");
    tm_cmd->add_option("--counts", tm_opts.counts_n, "Exact counts for one prefix length");
    tm_cmd->add_option("--n-max", tm_opts.n_max, "Sweep the sandwich bounds up to n_max");
    add_common_options(tm_cmd, g);

    SturmianOpts st_opts;
    CLI::App* st_cmd =
        app.add_subcommand("sturmian", "Mechanical words and continued-fraction words");
    st_cmd->add_option("--alpha", st_opts.alpha, "Slope literal surd:p,q,d,r");
    st_cmd->add_option("--beta", st_opts.beta, "Intercept: 0, p/q, or =alpha");
    st_cmd->add_option("--variant", st_opts.variant, "floor|ceil");
    st_cmd->add_option("--length", st_opts.length, "Symbols to generate");
    st_cmd->add_option("--cf", st_opts.cf, "Continued fraction literal cf:a1,a2,...");
    st_cmd->add_option("--j", st_opts.j, "Index of s_j for --cf");
    st_cmd->add_option("--target", st_opts.target, "Binary word for convention search");
    st_cmd->add_flag("--match-fibonacci", st_opts.match_fibonacci,
                     "Search conventions against a Fibonacci-word prefix");
    add_common_options(st_cmd, g);

    PalOpts pal_opts;
    pal_opts.source.system = "fibonacci";
    pal_opts.source.length = 10000;
    CLI::App* pal_cmd =
        app.add_subcommand("pal", "Palindromic prefixes and density bound checks");
    pal_cmd->add_option("--system", pal_opts.source.system, "fibonacci|tm|y");
    pal_cmd->add_option("--word", pal_opts.source.word_literal, "Literal word to scan");
    pal_cmd->add_option("--morphism-file", pal_opts.source.morphism_file,
                        "Fixed point of a morphism from a rules file");
    pal_cmd->add_option("--seed", pal_opts.source.seed, "Seed symbol for --morphism-file");
    pal_cmd->add_option("--length", pal_opts.source.length, "Prefix length to scan")
        ->default_val(std::uint64_t{10000});
    pal_cmd->add_option("--tail", pal_opts.tail, "Tail pairs for the estimator")
        ->default_val(std::size_t{5});
    pal_cmd->add_flag("--bounds", pal_opts.bounds,
                      "Check the interior-density inequalities instead");
    add_common_options(pal_cmd, g);

    IdOpts id_opts;
    CLI::App* id_cmd = app.add_subcommand("id", "Fibonacci identities evaluated exactly");
    CLI::Option* fib_opt = id_cmd->add_option("--fib", id_opts.fib_n, "Fibonacci number f_n");
    CLI::Option* binom_opt = id_cmd->add_option("--central-binomial", id_opts.binom_n,
                                                "Central binomial coefficient C(2n,n)");
    id_cmd->add_flag("--list", id_opts.list, "List the claim registry");
    id_cmd->add_option("--claim", id_opts.claim, "Claim id to evaluate");
    id_cmd->add_option("--eval", id_opts.eval, "Single case, e.g. n=1,k=4");
    id_cmd->add_option("--sweep", id_opts.sweep, "Ranges, e.g. n=1..2,k-offset=3..4");
    id_cmd->add_option("--fib-mode", id_opts.fib_mode, "negafibonacci|absolute");
    add_common_options(id_cmd, g);

    Thm51Opts thm_opts;
    CLI::App* thm_cmd =
        app.add_subcommand("thm51", "Paired-subword density report for a finite word");
    thm_cmd->add_option("--word", thm_opts.word, "Word literal, at least 3 symbols")
        ->required();
    thm_cmd->add_option("--mode", thm_opts.mode, "symbol-value|frequency");
    thm_cmd->add_option("--start", thm_opts.start, "Tail start index");
    add_common_options(thm_cmd, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    gen_opts.has_length = gen_cmd->count("--length") > 0;
    gen_opts.has_index = gen_cmd->count("--index") > 0;
    gen_opts.has_blocks = gen_cmd->count("--blocks") > 0;
    dens_opts.has_n = dens_cmd->count("--n") > 0;
    tm_opts.has_counts = tm_cmd->count("--counts") > 0;
    tm_opts.has_n_max = tm_cmd->count("--n-max") > 0;
    st_opts.has_length = st_cmd->count("--length") > 0;
    st_opts.has_j = st_cmd->count("--j") > 0;
    id_opts.has_fib = fib_opt->count() > 0;
    id_opts.has_binom = binom_opt->count() > 0;

    try {
        std::string out;
        if (gen_cmd->parsed())
            run_gen(gen_opts, g, out);
        else if (dens_cmd->parsed())
            run_dens(dens_opts, g, out);
        else if (stats_cmd->parsed())
            run_stats(stats_n_max, g, out);
        else if (table_cmd->parsed())
            run_table(table_lo, table_hi, g, out);
        else if (tm_cmd->parsed())
            run_tm(tm_opts, g, out);
        else if (st_cmd->parsed())
            run_sturmian(st_opts, g, out);
        else if (pal_cmd->parsed())
            run_pal(pal_opts, g, out);
        else if (id_cmd->parsed())
            run_id(id_opts, g, out);
        else if (thm_cmd->parsed())
            run_thm51(thm_opts, g, out);
        else
            fail_internal("no subcommand dispatched");
        write_output(g, out);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::Parse) ? 1
                                                                                        : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
