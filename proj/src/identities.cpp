#include "wordlab/identities.hpp"

#include <algorithm>
#include <cstdlib>

#include "wordlab/error.hpp"
#include "wordlab/parallel.hpp"

namespace wordlab {

Int fib(long n, long index_limit) {
    long m = std::labs(n);
    if (m > index_limit)
        fail_resource("fib: index " + std::to_string(n) + " exceeds the limit of " +
                      std::to_string(index_limit));
    Int a = 0, b = 1;  // f_0, f_1
    for (long i = 0; i < m; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    // a == f_m here; flip the sign for even negative indices.
    if (n < 0 && m % 2 == 0) return -a;
    return a;
}

Int central_binomial(unsigned long n) {
    // C(2n, n) = prod_{k=1..n} (n+k)/k, exact at every step.
    Int r = 1;
    for (unsigned long k = 1; k <= n; ++k) {
        r *= n + k;
        r /= k;
    }
    return r;
}

const char* claim_verdict_name(ClaimVerdict v) {
    switch (v) {
        case ClaimVerdict::True: return "true";
        case ClaimVerdict::False: return "false";
        case ClaimVerdict::Undefined: return "undefined";
    }
    return "?";
}

namespace {

int parity_sign(long j) {
    return (j % 2 == 0) ? 1 : -1;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int pow_int(const Int& base, long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

struct EvalContext {
    FibIndexMode mode;
    Int f(long i) const {
        Int v = fib(i);
        if (mode == FibIndexMode::AbsoluteValue) return abs(v);
        return v;
    }
};

using Evaluator = ClaimReport (*)(const EvalContext&, const std::vector<long>&);

ClaimReport base_report(const ClaimInfo& info, const std::vector<long>& params);

// --- individual claims ------------------------------------------------

// lhs 2^n f_k^n / (n! f_{n+k-3} f_{n-k-5}); rhs C(2n,n).
ClaimReport eval_prop32(const EvalContext& cx, const std::vector<long>& p) {
    long n = p[0], k = p[1];
    ClaimReport r = base_report(claim_info("prop32"), p);
    Int d1 = cx.f(n + k - 3);
    Int d2 = cx.f(n - k - 5);
    if (d1 == 0 || d2 == 0) {
        r.verdict = ClaimVerdict::Undefined;
        r.note = std::string("denominator factor f_{") +
                 (d1 == 0 ? "n+k-3" : "n-k-5") + "} vanishes";
        r.rhs = Rat(central_binomial(static_cast<unsigned long>(n)));
        return r;
    }
    Int num = pow_int(Int(2), n) * pow_int(cx.f(k), n);
    r.lhs = make_rat(num, factorial(n) * d1 * d2);
    r.rhs = Rat(central_binomial(static_cast<unsigned long>(n)));
    r.verdict = (*r.lhs == *r.rhs) ? ClaimVerdict::True : ClaimVerdict::False;
    return r;
}

// lhs f_{n+k-3} f_{n-k-5}; rhs f_k f_{2n-6} + (-1)^{n-3} f_{2n-6}.
ClaimReport eval_core_identity(const EvalContext& cx, const std::vector<long>& p) {
    long n = p[0], k = p[1];
    ClaimReport r = base_report(claim_info("core-identity"), p);
    r.lhs = Rat(cx.f(n + k - 3) * cx.f(n - k - 5));
    r.rhs = Rat(cx.f(k) * cx.f(2 * n - 6) + parity_sign(n - 3) * cx.f(2 * n - 6));
    r.verdict = (*r.lhs == *r.rhs) ? ClaimVerdict::True : ClaimVerdict::False;
    return r;
}

// lhs f_{m+r} f_{m-r-1}; rhs f_m f_{2r} + (-1)^{m-1} f_{2m-2r-2}.
ClaimReport eval_catalan_eq4(const EvalContext& cx, const std::vector<long>& p) {
    long m = p[0], rr = p[1];
    ClaimReport r = base_report(claim_info("catalan-eq4"), p);
    r.lhs = Rat(cx.f(m + rr) * cx.f(m - rr - 1));
    r.rhs = Rat(cx.f(m) * cx.f(2 * rr) + parity_sign(m - 1) * cx.f(2 * m - 2 * rr - 2));
    r.verdict = (*r.lhs == *r.rhs) ? ClaimVerdict::True : ClaimVerdict::False;
    return r;
}

// lhs f_{m+r} f_m - f_{m+r-1} f_{m+1}; rhs (-1)^m f_r.
ClaimReport eval_docagne_printed(const EvalContext& cx, const std::vector<long>& p) {
    long m = p[0], rr = p[1];
    ClaimReport r = base_report(claim_info("docagne-printed"), p);
    r.lhs = Rat(cx.f(m + rr) * cx.f(m) - cx.f(m + rr - 1) * cx.f(m + 1));
    r.rhs = Rat(parity_sign(m) * cx.f(rr));
    r.verdict = (*r.lhs == *r.rhs) ? ClaimVerdict::True : ClaimVerdict::False;
    return r;
}

// lhs f_m f_{n+1} - f_{m+1} f_n; rhs (-1)^n f_{m-n}.
ClaimReport eval_docagne_standard(const EvalContext& cx, const std::vector<long>& p) {
    long m = p[0], n = p[1];
    ClaimReport r = base_report(claim_info("docagne-standard"), p);
    r.lhs = Rat(cx.f(m) * cx.f(n + 1) - cx.f(m + 1) * cx.f(n));
    r.rhs = Rat(parity_sign(n) * cx.f(m - n));
    r.verdict = (*r.lhs == *r.rhs) ? ClaimVerdict::True : ClaimVerdict::False;
    return r;
}

// lhs f_n + f_{n-1}; rhs f_{2n}.
ClaimReport eval_safeword_eq2(const EvalContext& cx, const std::vector<long>& p) {
    long n = p[0];
    ClaimReport r = base_report(claim_info("safeword-eq2"), p);
    r.lhs = Rat(cx.f(n) + cx.f(n - 1));
    r.rhs = Rat(cx.f(2 * n));
    r.verdict = (*r.lhs == *r.rhs) ? ClaimVerdict::True : ClaimVerdict::False;
    return r;
}

// lhs f_{n+k-3} f_{n-k-5}; rhs f_k^{n-1} f_{2n} / n.
ClaimReport eval_eq7(const EvalContext& cx, const std::vector<long>& p) {
    long n = p[0], k = p[1];
    ClaimReport r = base_report(claim_info("eq7"), p);
    r.lhs = Rat(cx.f(n + k - 3) * cx.f(n - k - 5));
    r.rhs = make_rat(pow_int(cx.f(k), n - 1) * cx.f(2 * n), Int(n));
    r.verdict = (*r.lhs == *r.rhs) ? ClaimVerdict::True : ClaimVerdict::False;
    return r;
}

struct RegisteredClaim {
    ClaimInfo info;
    Evaluator eval;
    bool (*in_domain)(const std::vector<long>&);
};

const std::vector<RegisteredClaim>& registered() {
    static const std::vector<RegisteredClaim> claims = {
        {{"prop32",
          {"n", "k"},
          "2^n f_k^n / (n! f_{n+k-3} f_{n-k-5}) = C(2n,n)",
          "n >= 1, k >= n+3"},
         eval_prop32,
         [](const std::vector<long>& p) { return p[0] >= 1 && p[1] >= p[0] + 3; }},
        {{"core-identity",
          {"n", "k"},
          "f_{n+k-3} f_{n-k-5} = f_k f_{2n-6} + (-1)^{n-3} f_{2n-6}",
          "any integers"},
         eval_core_identity,
         [](const std::vector<long>&) { return true; }},
        {{"catalan-eq4",
          {"m", "r"},
          "f_{m+r} f_{m-r-1} = f_m f_{2r} + (-1)^{m-1} f_{2m-2r-2}",
          "r >= 0, m > r+1"},
         eval_catalan_eq4,
         [](const std::vector<long>& p) { return p[1] >= 0 && p[0] > p[1] + 1; }},
        {{"docagne-printed",
          {"m", "r"},
          "f_{m+r} f_m - f_{m+r-1} f_{m+1} = (-1)^m f_r",
          "m >= 1, r >= 0"},
         eval_docagne_printed,
         [](const std::vector<long>& p) { return p[0] >= 1 && p[1] >= 0; }},
        {{"docagne-standard",
          {"m", "n"},
          "f_m f_{n+1} - f_{m+1} f_n = (-1)^n f_{m-n}",
          "any integers"},
         eval_docagne_standard,
         [](const std::vector<long>&) { return true; }},
        {{"safeword-eq2", {"n"}, "f_n + f_{n-1} = f_{2n}", "any integer"},
         eval_safeword_eq2,
         [](const std::vector<long>&) { return true; }},
        {{"eq7",
          {"n", "k"},
          "f_{n+k-3} f_{n-k-5} = f_k^{n-1} f_{2n} / n",
          "n >= 1, k >= n+3"},
         eval_eq7,
         [](const std::vector<long>& p) { return p[0] >= 1 && p[1] >= p[0] + 3; }},
    };
    return claims;
}

const RegisteredClaim& find_claim(const std::string& claim_id) {
    for (const RegisteredClaim& c : registered())
        if (c.info.id == claim_id) return c;
    fail_invalid("unknown claim '" + claim_id + "'");
}

ClaimReport base_report(const ClaimInfo& info, const std::vector<long>& params) {
    ClaimReport r;
    r.claim = info.id;
    for (std::size_t i = 0; i < info.param_names.size(); ++i)
        r.params.push_back({info.param_names[i], params[i]});
    return r;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> v;
        for (const RegisteredClaim& c : registered()) v.push_back(c.info);
        return v;
    }();
    return infos;
}

const ClaimInfo& claim_info(const std::string& claim_id) {
    return find_claim(claim_id).info;
}

ClaimReport claim_eval(const std::string& claim_id, const std::vector<long>& params,
                       FibIndexMode mode) {
    const RegisteredClaim& c = find_claim(claim_id);
    if (params.size() != c.info.param_names.size())
        fail_invalid("claim '" + claim_id + "' takes " +
                     std::to_string(c.info.param_names.size()) + " parameter(s)");
    if (!c.in_domain(params))
        fail_invalid("claim '" + claim_id + "' parameters outside domain (" +
                     c.info.domain + ")");
    EvalContext cx{mode};
    return c.eval(cx, params);
}

std::string claim_params_string(const std::vector<ClaimParam>& params) {
    std::string out;
    for (const ClaimParam& p : params) {
        if (!out.empty()) out.push_back(';');
        out += p.name + "=" + std::to_string(p.value);
    }
    return out;
}

namespace {

long resolve_bound(const RangeBound& b, const std::vector<ClaimParam>& fixed) {
    if (b.base.empty()) return b.offset;
    for (const ClaimParam& p : fixed)
        if (p.name == b.base) return p.value + b.offset;
    fail_invalid("sweep bound refers to '" + b.base +
                 "', which is not an earlier parameter");
}

void enumerate_cases(const std::vector<ParamRange>& ranges, std::size_t depth,
                     std::vector<ClaimParam>& fixed,
                     std::vector<std::vector<long>>& out) {
    if (depth == ranges.size()) {
        std::vector<long> values;
        for (const ClaimParam& p : fixed) values.push_back(p.value);
        out.push_back(std::move(values));
        return;
    }
    const ParamRange& r = ranges[depth];
    long lo = resolve_bound(r.lo, fixed);
    long hi = resolve_bound(r.hi, fixed);
    for (long v = lo; v <= hi; ++v) {
        fixed.push_back({r.name, v});
        enumerate_cases(ranges, depth + 1, fixed, out);
        fixed.pop_back();
    }
}

}  // namespace

SweepSummary claim_sweep(const std::string& claim_id, const std::vector<ParamRange>& ranges,
                         FibIndexMode mode) {
    const RegisteredClaim& c = find_claim(claim_id);
    if (ranges.size() != c.info.param_names.size())
        fail_invalid("sweep for '" + claim_id + "' needs ranges for exactly: " +
                     [&] {
                         std::string s;
                         for (const std::string& n : c.info.param_names) {
                             if (!s.empty()) s += ", ";
                             s += n;
                         }
                         return s;
                     }());
    for (std::size_t i = 0; i < ranges.size(); ++i)
        if (ranges[i].name != c.info.param_names[i])
            fail_invalid("sweep range " + std::to_string(i + 1) + " must be for '" +
                         c.info.param_names[i] + "', got '" + ranges[i].name + "'");
    for (const ParamRange& r : ranges)
        if (r.lo.base.empty() && r.hi.base.empty() && r.lo.offset > r.hi.offset)
            fail_invalid("empty range for '" + r.name + "'");

    std::vector<std::vector<long>> cases;
    std::vector<ClaimParam> fixed;
    enumerate_cases(ranges, 0, fixed, cases);
    if (cases.empty()) fail_invalid("sweep for '" + claim_id + "' has no cases");

    SweepSummary summary;
    summary.claim = claim_id;
    summary.cases.resize(cases.size());
    EvalContext cx{mode};
    parallel_chunks(cases.size(), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            if (!c.in_domain(cases[i]))
                fail_invalid("sweep case " + claim_params_string([&] {
                                 std::vector<ClaimParam> ps;
                                 for (std::size_t j = 0; j < cases[i].size(); ++j)
                                     ps.push_back({c.info.param_names[j], cases[i][j]});
                                 return ps;
                             }()) +
                             " outside domain (" + c.info.domain + ")");
            summary.cases[i] = c.eval(cx, cases[i]);
        }
    });
    for (const ClaimReport& r : summary.cases) {
        if (r.verdict == ClaimVerdict::True) ++summary.true_count;
        else if (r.verdict == ClaimVerdict::False) ++summary.false_count;
        else ++summary.undefined_count;
    }
    return summary;
}

}  // namespace wordlab
