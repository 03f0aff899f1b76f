#include "wordlab/quadratic.hpp"

#include "wordlab/error.hpp"

namespace wordlab {

Int Quad::normalize_radicand(Rat& b, Int d) {
    // Pull small square factors out of d so equal values share a radicand.
    // Factors above the cap stay put; radicands here are small in practice.
    for (Int i = 2; i * i <= d && i <= 65536; ++i) {
        Int sq = i * i;
        while (d % sq == 0) {
            d /= sq;
            b *= Rat(i);
        }
    }
    b.canonicalize();
    return d;
}

Quad Quad::surd(const Rat& a, const Rat& b, const Int& d) {
    if (d < 0) fail_invalid("Quad: negative radicand");
    Quad q;
    q.a_ = a;
    q.b_ = b;
    q.d_ = 0;
    if (b == 0) return q;
    if (is_perfect_square(d)) {
        // sqrt(d) is an integer; the value is rational.
        q.a_ += b * Rat(isqrt(d));
        q.a_.canonicalize();
        q.b_ = 0;
        return q;
    }
    q.d_ = normalize_radicand(q.b_, d);
    return q;
}

Quad Quad::golden_ratio() {
    return surd(Rat(1, 2), Rat(1, 2), Int(5));
}

const Rat& Quad::rational_value() const {
    if (!is_rational()) fail_invalid("Quad: rational_value on an irrational value");
    return a_;
}

void Quad::merge_radicand(const Quad& o, Int& d) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        fail_invalid("Quad: mixed radicands " + d_.get_str() + " and " + o.d_.get_str());
    d = (d_ != 0) ? d_ : o.d_;
}

int Quad::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 * d. Equality would make
    // sqrt(d) rational, which the invariant rules out.
    Rat lhs = a_ * a_;
    Rat rhs = b_ * b_ * Rat(d_);
    int c = cmp(lhs, rhs);
    if (c == 0) fail_internal("Quad: degenerate radicand slipped through");
    return c > 0 ? sa : sb;
}

void Quad::integer_form(Int& p, Int& q, Int& r) const {
    const Int& da = a_.get_den();
    const Int& db = b_.get_den();
    p = a_.get_num() * db;
    q = b_.get_num() * da;
    r = da * db;
}

Int Quad::floor() const {
    Int p, q, r;
    integer_form(p, q, r);
    if (q == 0) return floor_div(p, r);
    Int root = isqrt(q * q * d_);
    // sqrt(q^2 d) is irrational, so floor(q*sqrt(d)) is root for positive q
    // and -root - 1 for negative q.
    Int t = (q > 0) ? Int(p + root) : Int(p - root - 1);
    return floor_div(t, r);
}

Int Quad::ceil() const {
    return -((-*this).floor());
}

Quad Quad::operator-() const {
    Quad q;
    q.a_ = -a_;
    q.b_ = -b_;
    q.d_ = d_;
    return q;
}

Quad Quad::operator+(const Quad& o) const {
    Int d;
    merge_radicand(o, d);
    Quad q;
    q.a_ = a_ + o.a_;
    q.b_ = b_ + o.b_;
    q.d_ = (q.b_ == 0) ? Int(0) : d;
    return q;
}

Quad Quad::operator-(const Quad& o) const {
    return *this + (-o);
}

Quad Quad::operator*(const Quad& o) const {
    Int d;
    merge_radicand(o, d);
    Quad q;
    q.a_ = a_ * o.a_ + b_ * o.b_ * Rat(d);
    q.b_ = a_ * o.b_ + b_ * o.a_;
    q.a_.canonicalize();
    q.b_.canonicalize();
    q.d_ = (q.b_ == 0) ? Int(0) : d;
    return q;
}

Quad Quad::operator/(const Quad& o) const {
    Int d;
    merge_radicand(o, d);
    Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(d);
    norm.canonicalize();
    if (norm == 0) fail_invalid("Quad: division by zero");
    Quad conj;
    conj.a_ = o.a_ / norm;
    conj.b_ = -o.b_ / norm;
    conj.a_.canonicalize();
    conj.b_.canonicalize();
    conj.d_ = (conj.b_ == 0) ? Int(0) : d;
    return *this * conj;
}

bool Quad::operator==(const Quad& o) const {
    return a_ == o.a_ && b_ == o.b_ && d_ == o.d_;
}

std::string Quad::exact_string() const {
    if (is_rational()) return rat_to_string(a_);
    Int p, q, r;
    integer_form(p, q, r);
    Int g = gcd(gcd(abs(p), abs(q)), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    std::string surd_term;
    if (q == 1)
        surd_term = "sqrt(" + d_.get_str() + ")";
    else if (q == -1)
        surd_term = "-sqrt(" + d_.get_str() + ")";
    else
        surd_term = q.get_str() + "*sqrt(" + d_.get_str() + ")";
    std::string body;
    if (p == 0)
        body = surd_term;
    else
        body = p.get_str() + (q > 0 ? "+" : "") + surd_term;
    if (r == 1) return body;
    return "(" + body + ")/" + r.get_str();
}

std::string Quad::decimal(int places) const {
    if (is_rational()) return decimal_of_rat(a_, places);
    bool negative = sign() < 0;
    Quad scaled = *this * Quad(Rat(pow10(static_cast<unsigned>(places) + 1)));
    if (negative) scaled = -scaled;
    return decimal_from_guarded_floor(scaled.floor(), places, negative);
}

}  // namespace wordlab
