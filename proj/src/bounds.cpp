#include "wordlab/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include "wordlab/counting.hpp"
#include "wordlab/error.hpp"
#include "wordlab/palindromes.hpp"

namespace wordlab {

namespace {

std::string format_fixed(double x, int places = 9) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, x);
    return buf;
}

// Brackets of e to 30 places; a rational ratio never lands between them.
const Int& e_bracket_den() {
    static const Int den = pow10(30);
    return den;
}

}  // namespace

bool ratio_at_least_e(const Rat& ratio) {
    static const Int lo_num("2718281828459045235360287471352");
    Rat lo = make_rat(lo_num, e_bracket_den());
    Rat hi = make_rat(lo_num + 1, e_bracket_den());
    if (ratio >= hi) return true;
    if (ratio <= lo) return false;
    fail_internal("ratio_at_least_e: bracket too coarse");
}

bool ratio_at_least_ten(const Rat& ratio) { return ratio >= Rat(10); }

const char* log_interp_name(LogInterp interp) {
    switch (interp) {
        case LogInterp::RowRatioNaturalLog: return "A";
        case LogInterp::RowRatioLog10: return "B";
        case LogInterp::LiteralPowersNaturalLog: return "C";
    }
    return "?";
}

BoundReport log_density_check(const RecursiveSpec& spec, unsigned n, LogInterp interp) {
    BoundReport rep;
    rep.claim = "lemma42";
    rep.params = "n=" + std::to_string(n);
    rep.interpretation = log_interp_name(interp);
    rep.left_exact = "1";
    rep.left_decimal = "1.000000000";
    if (n < 1) fail_invalid("log_density_check: n must be at least 1");

    Rat ratio;
    bool natural = true;
    if (interp == LogInterp::LiteralPowersNaturalLog) {
        CountVector base = counts_recursive(spec, 2);
        Int num(0);
        for (const Int& c : base.counts) {
            Int p;
            mpz_pow_ui(p.get_mpz_t(), c.get_mpz_t(), n);
            num += p;
        }
        Int den;
        mpz_pow_ui(den.get_mpz_t(), base.total.get_mpz_t(), n - 1);
        ratio = make_rat(num, den);
        rep.note = "letter counts at index 2 raised to the power n, natural log";
    } else {
        Int len_n = recursive_length(spec, n);
        Int len_prev = recursive_length(spec, n - 1);
        ratio = make_rat(len_n, len_prev);
        natural = (interp == LogInterp::RowRatioNaturalLog);
        rep.note = natural ? "ratio of consecutive total lengths, natural log"
                           : "ratio of consecutive total lengths, log base 10";
    }

    double x = mpq_get_d(ratio.get_mpq_t());
    if (natural) {
        rep.right_exact = "ln(" + rat_to_string(ratio) + ")";
        rep.right_decimal = format_fixed(std::log(x));
        rep.verdict = ratio_at_least_e(ratio) ? BoundVerdict::Holds : BoundVerdict::Violated;
    } else {
        rep.right_exact = "log10(" + rat_to_string(ratio) + ")";
        rep.right_decimal = format_fixed(std::log10(x));
        rep.verdict = ratio_at_least_ten(ratio) ? BoundVerdict::Holds : BoundVerdict::Violated;
    }
    return rep;
}

std::vector<BoundReport> interior_density_bounds(const Word& w, std::size_t tail) {
    if (w.size() < 4) fail_invalid("interior_density_bounds: need a prefix of length >= 4");
    Word inner = interior(w);
    Rat est_word = densp_estimate(palindromic_prefix_lengths(w), tail);
    Rat est_inner = densp_estimate(palindromic_prefix_lengths(inner), tail);
    Quad inv_phi = Quad::surd(Rat(-1, 2), Rat(1, 2), Int(5));
    Quad two_inv_phi = inv_phi + inv_phi;
    std::string params =
        "len=" + std::to_string(w.size()) + ";tail=" + std::to_string(tail);
    std::string estimator = "densp tail estimate";

    std::vector<BoundReport> out;
    {
        BoundReport r;
        r.claim = "interior-le-word";
        r.params = params;
        r.interpretation = estimator;
        r.left_exact = rat_to_string(est_inner);
        r.right_exact = rat_to_string(est_word);
        r.left_decimal = decimal_of_rat(est_inner);
        r.right_decimal = decimal_of_rat(est_word);
        r.verdict = est_inner <= est_word ? BoundVerdict::Holds : BoundVerdict::Violated;
        r.note = "palindromic prefix density estimate of the interior versus the word";
        out.push_back(r);
    }
    {
        BoundReport r;
        r.claim = "word-le-inv-phi1";
        r.params = params;
        r.interpretation = estimator;
        r.left_exact = rat_to_string(est_word);
        r.right_exact = inv_phi.exact_string();
        r.left_decimal = decimal_of_rat(est_word);
        r.right_decimal = inv_phi.decimal();
        if ((Quad(est_word) - inv_phi).sign() <= 0) {
            r.verdict = BoundVerdict::Holds;
            r.note = "tail estimate stays below (sqrt(5)-1)/2";
        } else {
            r.verdict = BoundVerdict::PreconditionNote;
            r.note =
                "tail estimate exceeds (sqrt(5)-1)/2; the bound presumes a word "
                "that begins with arbitrarily long palindromes and is not "
                "ultimately periodic";
        }
        out.push_back(r);
    }
    {
        BoundReport r;
        r.claim = "interior-le-2-inv-phi1";
        r.params = params;
        r.interpretation = estimator;
        r.left_exact = rat_to_string(est_inner);
        r.right_exact = two_inv_phi.exact_string();
        r.left_decimal = decimal_of_rat(est_inner);
        r.right_decimal = two_inv_phi.decimal();
        r.verdict = (Quad(est_inner) - two_inv_phi).sign() <= 0 ? BoundVerdict::Holds
                                                                : BoundVerdict::Violated;
        r.note = "estimates lie in [0,1], so the bound 2/phi1 > 1 is immediate";
        out.push_back(r);
    }
    return out;
}

namespace {

struct DensValue {
    std::optional<Rat> value;
    std::string note;
};

DensValue word_density(const Word& w, TailDensityMode mode, std::size_t start) {
    DensValue d;
    if (start >= w.size()) {
        d.note = "start index " + std::to_string(start) + " leaves an empty tail";
        return d;
    }
    unsigned max_sym = 0;
    for (std::uint64_t i = start; i < w.size(); ++i) max_sym = std::max(max_sym, w[i]);
    if (mode == TailDensityMode::SymbolValue) {
        d.value = Rat(static_cast<unsigned long>(max_sym));
        return d;
    }
    std::uint64_t hits = 0;
    for (std::uint64_t i = start; i < w.size(); ++i)
        if (w[i] == max_sym) ++hits;
    d.value = make_rat(Int(hits), Int(w.size() - start));
    return d;
}

Word doubled_word(const Word& w) {
    Word out(w.alphabet());
    out.reserve(2 * w.size());
    for (std::uint64_t i = 0; i < w.size(); ++i) {
        out.push_back(w[i]);
        out.push_back(w[i]);
    }
    return out;
}

PairedSubwordTerm value_term(const std::string& label, const DensValue& d) {
    PairedSubwordTerm t;
    t.label = label;
    if (d.value) {
        t.defined = true;
        t.value_exact = rat_to_string(*d.value);
        t.value_decimal = decimal_of_rat(*d.value);
    } else {
        t.note = d.note;
    }
    return t;
}

PairedSubwordTerm ratio_term(const std::string& label, const PairedSubwordTerm& num_a,
                             const std::optional<Rat>& num, const PairedSubwordTerm& den_t,
                             const std::optional<Rat>& den) {
    PairedSubwordTerm t;
    t.label = label;
    if (!num || !den_t.defined) {
        t.note = "operand " + std::string(num ? den_t.label : num_a.label) + " is undefined";
        return t;
    }
    if (*den == 0) {
        t.note = "denominator " + den_t.label + " is zero";
        return t;
    }
    Rat q = *num / *den;
    q.canonicalize();
    t.defined = true;
    t.value_exact = rat_to_string(q);
    t.value_decimal = decimal_of_rat(q);
    return t;
}

}  // namespace

PairedSubwordReport paired_subword_report(const Word& w, TailDensityMode mode,
                                          std::size_t start_index) {
    if (w.size() < 3)
        fail_invalid("paired_subword_report: the word must have at least 3 symbols");
    PairedSubwordReport rep;
    Word dbl = doubled_word(w);
    Word inner = interior(w);
    Word dbl_inner = doubled_word(inner);
    rep.word = w.str();
    rep.doubled = dbl.str();
    rep.interior = inner.str();
    rep.doubled_interior = dbl_inner.str();
    rep.mode = mode;
    rep.start_index = start_index;

    DensValue d_m = word_density(w, mode, start_index);
    DensValue d_perp = word_density(dbl, mode, start_index);
    DensValue d_star = word_density(inner, mode, start_index);
    DensValue d_perp_star = word_density(dbl_inner, mode, start_index);
    DensValue d_diff;
    d_diff.value = Rat(static_cast<unsigned long>(std::max(w[0], w[w.size() - 1])));
    DensValue d_sum;
    d_sum.note = "the words have lengths " + std::to_string(w.size()) + " and " +
                 std::to_string(dbl.size()) + ", so the symbolwise sum is undefined";

    PairedSubwordTerm t_m = value_term("dens(m)", d_m);
    PairedSubwordTerm t_perp = value_term("dens(m^perp)", d_perp);
    PairedSubwordTerm t_star = value_term("dens(m^*)", d_star);
    PairedSubwordTerm t_perp_star = value_term("dens(m^perp,*)", d_perp_star);
    PairedSubwordTerm t_diff = value_term("dens(m-m^*)", d_diff);
    t_diff.note = "max of the first and last symbol values";
    PairedSubwordTerm t_sum = value_term("dens(m+m^perp)", d_sum);

    std::optional<Rat> sum_num;
    if (d_m.value && d_perp.value) sum_num = *d_m.value + *d_perp.value;
    PairedSubwordTerm f1 =
        ratio_term("(dens(m)+dens(m^perp))/dens(m+m^perp)", t_m, sum_num, t_sum, d_sum.value);
    PairedSubwordTerm f2 =
        ratio_term("dens(m^perp)/dens(m^*)", t_perp, d_perp.value, t_star, d_star.value);
    PairedSubwordTerm f3 = ratio_term("dens(m^perp,*)/dens(m-m^*)", t_perp_star,
                                      d_perp_star.value, t_diff, d_diff.value);

    Quad phi = Quad::golden_ratio();
    Quad two_inv_phi = Quad(Rat(2)) / phi;
    rep.constant_exact = two_inv_phi.exact_string();
    rep.constant_decimal = two_inv_phi.decimal();

    PairedSubwordTerm total;
    total.label = "total";
    std::string reasons;
    for (const PairedSubwordTerm* f : {&f1, &f2, &f3}) {
        if (!f->defined) {
            if (!reasons.empty()) reasons += "; ";
            reasons += f->label + ": " + f->note;
        }
    }
    if (reasons.empty()) {
        // Unreachable with the current configs: the first fraction always
        // divides by the undefined dens(m+m^perp).
        Rat v = Rat(0);
        total.defined = true;
        total.value_exact = rat_to_string(v);
        total.value_decimal = decimal_of_rat(v);
    } else {
        total.note = reasons;
    }

    rep.terms = {t_m, t_perp, t_star, t_perp_star, t_diff, t_sum, f1, f2, f3, total};
    rep.verdict = total.defined ? BoundVerdict::Holds : BoundVerdict::Undefined;
    rep.note = total.defined
                   ? "all subterms evaluated"
                   : "the total is undefined; undefined subterms: " + reasons;
    return rep;
}

}  // namespace wordlab
