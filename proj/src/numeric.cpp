#include "wordlab/numeric.hpp"

#include <cctype>

#include "wordlab/error.hpp"

namespace wordlab {

Int isqrt(const Int& x) {
    if (x < 0) fail_invalid("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool is_perfect_square(const Int& x) {
    if (x < 0) return false;
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) fail_invalid("floor_div: zero divisor");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int pow10(unsigned k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail_invalid("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_integer(num) || !is_integer(den))
        fail_parse("parse_rat: expected integer or p/q, got '" + std::string(text) + "'");
    // mpz rejects a leading '+', which is_integer allows
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    Int d{std::string(den)};
    if (d == 0) fail_parse("parse_rat: zero denominator in '" + std::string(text) + "'");
    return make_rat(Int(std::string(num)), d);
}

namespace {

// Formats Q * 10^-places as a fixed-point decimal.
std::string render_scaled(Int q, int places, bool negative) {
    if (q == 0) negative = false;
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) < places + 1)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (negative) out.push_back('-');
    out.append(digits, 0, digits.size() - places);
    if (places > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - places, std::string::npos);
    }
    return out;
}

}  // namespace

std::string decimal_of_rat(const Rat& v, int places) {
    if (places < 0) fail_invalid("decimal_of_rat: negative places");
    bool negative = v < 0;
    Int p = abs(v.get_num());
    const Int& q = v.get_den();
    Int scaled = p * pow10(static_cast<unsigned>(places));
    Int quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_mpz_t());
    Int twice = 2 * rem;
    if (twice > q || (twice == q && mpz_odd_p(quot.get_mpz_t())))
        ++quot;
    return render_scaled(quot, places, negative);
}

std::string decimal_of_sqrt(const Rat& v, int places) {
    if (places < 0) fail_invalid("decimal_of_sqrt: negative places");
    if (v < 0) fail_invalid("decimal_of_sqrt: negative argument");
    if (v == 0) return decimal_of_rat(Rat(0), places);
    const Int& p = v.get_num();
    const Int& q = v.get_den();
    if (is_perfect_square(p) && is_perfect_square(q))
        return decimal_of_rat(make_rat(isqrt(p), isqrt(q)), places);
    unsigned m = static_cast<unsigned>(places) + 1;
    Int x = p * q * pow10(2 * m);
    Int f = isqrt(x) / q;
    return decimal_from_guarded_floor(f, places, false);
}

std::string decimal_from_guarded_floor(const Int& f, int places, bool negative) {
    if (places < 0 || f < 0) fail_invalid("decimal_from_guarded_floor: bad arguments");
    // The guard digit decides the rounding: floor pins the value inside a
    // half-open interval one guard ulp wide, which cannot straddle a rounding
    // boundary, and an irrational value never sits exactly on one.
    Int quot = f / 10;
    if (f % 10 >= 5) ++quot;
    return render_scaled(quot, places, negative);
}

std::string rat_to_string(const Rat& v) {
    return v.get_str();
}

}  // namespace wordlab
