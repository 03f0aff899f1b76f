#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordlab/numeric.hpp"
#include "wordlab/quadratic.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

// Irrational slope (p + q sqrt(d))/r constrained to (0,1).
class QuadraticSlope {
public:
    static QuadraticSlope create(const Int& p, const Int& q, const Int& d, const Int& r);
    // Literal syntax: surd:p,q,d,r
    static QuadraticSlope parse(const std::string& text);

    const Quad& value() const { return value_; }
    std::string to_string() const;  // canonical surd:p,q,d,r (r > 0, gcd one)

private:
    explicit QuadraticSlope(Quad v) : value_(std::move(v)) {}
    Quad value_;
};

// Intercept of the mechanical word: 0, a rational in [0,1), or "same as the
// slope" (written =alpha).
class Intercept {
public:
    enum class Kind { Zero, Rational, EqualAlpha };

    static Intercept zero() { return Intercept(Kind::Zero, Rat(0)); }
    static Intercept of(const Rat& v);
    static Intercept equal_alpha() { return Intercept(Kind::EqualAlpha, Rat(0)); }
    static Intercept parse(const std::string& text);  // "0" | "p/q" | "=alpha"

    Kind kind() const { return kind_; }
    Quad resolve(const QuadraticSlope& alpha) const;
    std::string to_string() const;

private:
    Intercept(Kind k, Rat v) : kind_(k), value_(std::move(v)) {}
    Kind kind_;
    Rat value_;
};

enum class MechanicalVariant { Floor, Ceil };
const char* mechanical_variant_name(MechanicalVariant v);

// u_n = floor(alpha(n+1)+beta) - floor(alpha n+beta) for n = 0..len-1,
// with ceil in place of floor for the ceil variant. Integer-only decisions.
Word mechanical_word(const QuadraticSlope& alpha, const Intercept& beta, std::uint64_t len,
                     MechanicalVariant variant);

// Partial quotients a_1, a_2, ... of a continued fraction [0; a_1, a_2, ...].
struct CFExpansion {
    std::vector<unsigned long> quotients;
    bool repeat_last = false;  // reuse the final quotient beyond the list

    // Literal syntax: cf:a1,a2,... with an optional trailing ",..." marker.
    static CFExpansion parse(const std::string& text);
    unsigned long at(std::size_t j) const;  // 1-based
};

// s_j from s_{-1} = 1, s_0 = 0, s_j = s_{j-1}^{a_j} s_{j-2}.
Word cf_word(const CFExpansion& cf, long j);

struct SlopeCandidate {
    QuadraticSlope alpha;
    Intercept beta;
    MechanicalVariant variant;
};

// All candidates whose mechanical word starts with target, in input order.
std::vector<SlopeCandidate> slope_match_search(const Word& target,
                                               const std::vector<SlopeCandidate>& candidates);

// The eight conventions {1/phi1, 1/phi1^2} x {0, =alpha} x {floor, ceil},
// where phi1 is the golden ratio.
std::vector<SlopeCandidate> standard_candidate_grid();

}  // namespace wordlab
