#include "wordlab/sturmian.hpp"

#include <cstdlib>

#include "wordlab/error.hpp"
#include "wordlab/generators.hpp"
#include "wordlab/parallel.hpp"

namespace wordlab {

namespace {

Int parse_int_token(const std::string& token, const std::string& what) {
    if (token.empty()) fail_parse(what + ": empty integer");
    std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (i == token.size()) fail_parse(what + ": '" + token + "' is not an integer");
    for (; i < token.size(); ++i)
        if (token[i] < '0' || token[i] > '9')
            fail_parse(what + ": '" + token + "' is not an integer");
    return Int(token.c_str());
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

QuadraticSlope QuadraticSlope::create(const Int& p, const Int& q, const Int& d,
                                      const Int& r) {
    if (r == 0) fail_invalid("slope: r must be nonzero");
    Quad v = Quad::surd(make_rat(p, r), make_rat(q, r), d);
    if (v.is_rational()) fail_invalid("slope must be irrational");
    if (v.sign() <= 0 || (v - Quad(Rat(1))).sign() >= 0)
        fail_invalid("slope must lie in (0,1)");
    return QuadraticSlope(std::move(v));
}

QuadraticSlope QuadraticSlope::parse(const std::string& text) {
    const std::string prefix = "surd:";
    if (text.rfind(prefix, 0) != 0)
        fail_parse("slope literal must look like surd:p,q,d,r");
    std::vector<std::string> parts = split_commas(text.substr(prefix.size()));
    if (parts.size() != 4) fail_parse("slope literal must have four integers p,q,d,r");
    return create(parse_int_token(parts[0], "slope p"), parse_int_token(parts[1], "slope q"),
                  parse_int_token(parts[2], "slope d"), parse_int_token(parts[3], "slope r"));
}

std::string QuadraticSlope::to_string() const {
    Int p, q, r;
    value_.integer_form(p, q, r);
    Int g = gcd(gcd(abs(p), abs(q)), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    return "surd:" + p.get_str() + "," + q.get_str() + "," + value_.radicand().get_str() +
           "," + r.get_str();
}

Intercept Intercept::of(const Rat& v) {
    if (v < 0 || v >= 1) fail_invalid("intercept must lie in [0,1)");
    return Intercept(v == 0 ? Kind::Zero : Kind::Rational, v);
}

Intercept Intercept::parse(const std::string& text) {
    if (text == "0") return zero();
    if (text == "=alpha") return equal_alpha();
    return of(parse_rat(text));
}

Quad Intercept::resolve(const QuadraticSlope& alpha) const {
    switch (kind_) {
        case Kind::Zero: return Quad(Rat(0));
        case Kind::Rational: return Quad(value_);
        case Kind::EqualAlpha: return alpha.value();
    }
    fail_internal("intercept: bad kind");
}

std::string Intercept::to_string() const {
    switch (kind_) {
        case Kind::Zero: return "0";
        case Kind::Rational: return rat_to_string(value_);
        case Kind::EqualAlpha: return "=alpha";
    }
    fail_internal("intercept: bad kind");
}

const char* mechanical_variant_name(MechanicalVariant v) {
    return v == MechanicalVariant::Floor ? "floor" : "ceil";
}

Word mechanical_word(const QuadraticSlope& alpha, const Intercept& beta, std::uint64_t len,
                     MechanicalVariant variant) {
    const Quad& a = alpha.value();
    Quad x = beta.resolve(alpha);
    bool use_floor = (variant == MechanicalVariant::Floor);
    Int prev = use_floor ? x.floor() : x.ceil();
    Word w(alphabet_sigma(2));
    w.reserve(len);
    for (std::uint64_t n = 0; n < len; ++n) {
        x = x + a;
        Int cur = use_floor ? x.floor() : x.ceil();
        Int step = cur - prev;
        if (step < 0 || step > 1) fail_internal("mechanical_word: step outside {0,1}");
        w.push_back(static_cast<int>(step.get_ui()));
        prev = cur;
    }
    return w;
}

CFExpansion CFExpansion::parse(const std::string& text) {
    const std::string prefix = "cf:";
    if (text.rfind(prefix, 0) != 0)
        fail_parse("continued fraction literal must look like cf:a1,a2,...");
    std::vector<std::string> parts = split_commas(text.substr(prefix.size()));
    CFExpansion cf;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == "..." && i + 1 == parts.size() && i > 0) {
            cf.repeat_last = true;
            break;
        }
        Int v = parse_int_token(parts[i], "partial quotient");
        if (v < 1 || v > 1000000) fail_invalid("partial quotients must be in [1, 10^6]");
        cf.quotients.push_back(v.get_ui());
    }
    if (cf.quotients.empty()) fail_parse("continued fraction needs at least one quotient");
    return cf;
}

unsigned long CFExpansion::at(std::size_t j) const {
    if (j >= 1 && j <= quotients.size()) return quotients[j - 1];
    if (repeat_last && !quotients.empty()) return quotients.back();
    fail_invalid("continued fraction has no quotient a_" + std::to_string(j));
}

Word cf_word(const CFExpansion& cf, long j) {
    if (j < -1) fail_invalid("cf_word: j must be at least -1");
    // Predict |s_j| before materializing anything.
    Int len_prev2(1), len_prev(1);  // |s_{-1}|, |s_0|
    for (long i = 1; i <= j; ++i) {
        Int next = Int(cf.at(static_cast<std::size_t>(i))) * len_prev + len_prev2;
        len_prev2 = len_prev;
        len_prev = next;
        if (len_prev > Int(kDefaultSymbolBudget))
            fail_resource("cf_word: |s_" + std::to_string(i) + "| = " + len_prev.get_str() +
                          " symbols exceeds the budget of " +
                          std::to_string(kDefaultSymbolBudget));
    }

    Alphabet sigma2 = alphabet_sigma(2);
    Word prev2 = Word::from_symbols(sigma2, {1});  // s_{-1}
    Word prev = Word::from_symbols(sigma2, {0});   // s_0
    if (j == -1) return prev2;
    for (long i = 1; i <= j; ++i) {
        unsigned long a = cf.at(static_cast<std::size_t>(i));
        Word next(sigma2);
        next.reserve(a * prev.size() + prev2.size());
        for (unsigned long rep = 0; rep < a; ++rep) next.append(prev);
        next.append(prev2);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

std::vector<SlopeCandidate> slope_match_search(const Word& target,
                                               const std::vector<SlopeCandidate>& candidates) {
    if (target.size() == 0) fail_invalid("slope_match_search: target must be nonempty");
    if (target.alphabet().size() != 2)
        fail_invalid("slope_match_search: target must be binary");
    std::vector<char> matched(candidates.size(), 0);
    parallel_chunks(candidates.size(), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            Word w = mechanical_word(candidates[i].alpha, candidates[i].beta, target.size(),
                                     candidates[i].variant);
            matched[i] = (w == target) ? 1 : 0;
        }
    });
    std::vector<SlopeCandidate> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (matched[i]) out.push_back(candidates[i]);
    return out;
}

std::vector<SlopeCandidate> standard_candidate_grid() {
    QuadraticSlope inv_phi = QuadraticSlope::create(Int(-1), Int(1), Int(5), Int(2));
    QuadraticSlope inv_phi_sq = QuadraticSlope::create(Int(3), Int(-1), Int(5), Int(2));
    std::vector<SlopeCandidate> out;
    for (const QuadraticSlope& a : {inv_phi, inv_phi_sq})
        for (const Intercept& b : {Intercept::zero(), Intercept::equal_alpha()})
            for (MechanicalVariant v : {MechanicalVariant::Floor, MechanicalVariant::Ceil})
                out.push_back(SlopeCandidate{a, b, v});
    return out;
}

}  // namespace wordlab
