#include "doctest.h"

#include <cstdint>
#include <vector>

#include "wordlab/error.hpp"
#include "wordlab/generators.hpp"
#include "wordlab/quadratic.hpp"
#include "wordlab/sturmian.hpp"
#include "wordlab/word.hpp"

using namespace wordlab;

TEST_CASE("slope literals parse, validate, and canonicalize") {
    QuadraticSlope a = QuadraticSlope::parse("surd:-1,1,5,2");
    CHECK(a.to_string() == "surd:-1,1,5,2");
    CHECK(a.value().decimal() == "0.618033989");

    QuadraticSlope b = QuadraticSlope::parse("surd:-2,2,5,4");
    CHECK(b.to_string() == "surd:-1,1,5,2");
    CHECK(b.value() == a.value());

    QuadraticSlope c = QuadraticSlope::parse("surd:3,-1,5,2");
    CHECK(c.value().decimal() == "0.381966011");

    CHECK_THROWS_AS(QuadraticSlope::parse("surd:1,1,4,4"), Error);   // rational 3/4
    CHECK_THROWS_AS(QuadraticSlope::parse("surd:0,1,5,1"), Error);   // > 1
    CHECK_THROWS_AS(QuadraticSlope::parse("surd:0,-1,5,2"), Error);  // < 0
    CHECK_THROWS_AS(QuadraticSlope::parse("surd:1,1,5"), Error);     // arity
    CHECK_THROWS_AS(QuadraticSlope::parse("1,1,5,2"), Error);        // no prefix
    CHECK_THROWS_AS(QuadraticSlope::parse("surd:1,1,5,0"), Error);   // zero div
}

TEST_CASE("intercept literals") {
    QuadraticSlope alpha = QuadraticSlope::parse("surd:-1,1,5,2");
    Intercept zero = Intercept::parse("0");
    CHECK(zero.kind() == Intercept::Kind::Zero);
    CHECK(zero.to_string() == "0");
    CHECK(zero.resolve(alpha) == Quad(Rat(0)));

    Intercept third = Intercept::parse("1/3");
    CHECK(third.kind() == Intercept::Kind::Rational);
    CHECK(third.resolve(alpha) == Quad(Rat(1, 3)));
    CHECK(third.to_string() == "1/3");

    Intercept eq = Intercept::parse("=alpha");
    CHECK(eq.kind() == Intercept::Kind::EqualAlpha);
    CHECK(eq.resolve(alpha) == alpha.value());
    CHECK(eq.to_string() == "=alpha");

    CHECK_THROWS_AS(Intercept::parse("1"), Error);     // outside [0,1)
    CHECK_THROWS_AS(Intercept::parse("-1/3"), Error);
    CHECK_THROWS_AS(Intercept::parse("alpha"), Error);
}

TEST_CASE("mechanical words at pinned parameters") {
    QuadraticSlope narrow = QuadraticSlope::parse("surd:3,-1,5,2");   // 1/phi^2
    QuadraticSlope wide = QuadraticSlope::parse("surd:-1,1,5,2");     // 1/phi

    CHECK(mechanical_word(narrow, Intercept::zero(), 8, MechanicalVariant::Floor).str() ==
          "00100101");
    CHECK(mechanical_word(wide, Intercept::zero(), 5, MechanicalVariant::Floor).str() ==
          "01011");
    CHECK(mechanical_word(narrow, Intercept::equal_alpha(), 13,
                          MechanicalVariant::Floor)
              .str() == "0100101001001");
    CHECK(mechanical_word(narrow, Intercept::zero(), 0, MechanicalVariant::Floor).empty());
}

TEST_CASE("ones counts telescope to exact floors") {
    QuadraticSlope alpha = QuadraticSlope::parse("surd:3,-1,5,2");
    Word w = mechanical_word(alpha, Intercept::zero(), 10000, MechanicalVariant::Floor);
    std::uint64_t ones = 0;
    for (std::uint64_t n = 1; n <= w.size(); ++n) {
        ones += w[n - 1];
        if (n % 97 == 0 || n < 10) {
            Int expected = (alpha.value() * Quad(Rat(static_cast<long>(n)))).floor();
            CHECK(Int(ones) == expected);
        }
    }
}

TEST_CASE("floor and ceil variants differ exactly at the start when beta is zero") {
    QuadraticSlope alpha = QuadraticSlope::parse("surd:-1,1,5,2");
    Word lo = mechanical_word(alpha, Intercept::zero(), 5000, MechanicalVariant::Floor);
    Word hi = mechanical_word(alpha, Intercept::zero(), 5000, MechanicalVariant::Ceil);
    CHECK(lo[0] == 0);
    CHECK(hi[0] == 1);
    for (std::uint64_t i = 1; i < lo.size(); ++i) CHECK(lo[i] == hi[i]);
}

TEST_CASE("mechanical prefixes are balanced") {
    // any two equal-length factors have 1-counts within 1 of each other
    std::vector<Word> samples = {
        mechanical_word(QuadraticSlope::parse("surd:3,-1,5,2"), Intercept::zero(), 500,
                        MechanicalVariant::Floor),
        mechanical_word(QuadraticSlope::parse("surd:-1,1,5,2"), Intercept::parse("1/3"),
                        500, MechanicalVariant::Floor),
        mechanical_word(QuadraticSlope::parse("surd:0,1,2,2"), Intercept::equal_alpha(),
                        500, MechanicalVariant::Ceil),
    };
    for (const Word& w : samples) {
        for (std::uint64_t len = 1; len <= 12; ++len) {
            std::uint64_t window = 0, lo = len, hi = 0;
            for (std::uint64_t i = 0; i < w.size(); ++i) {
                window += w[i];
                if (i >= len) window -= w[i - len];
                if (i + 1 >= len) {
                    lo = std::min(lo, window);
                    hi = std::max(hi, window);
                }
            }
            CHECK(hi - lo <= 1);
        }
    }
}

TEST_CASE("continued-fraction words by the standard recursion") {
    CFExpansion ones = CFExpansion::parse("cf:1,1,1");
    CHECK(cf_word(ones, -1).str() == "1");
    CHECK(cf_word(ones, 0).str() == "0");
    CHECK(cf_word(ones, 1).str() == "01");
    CHECK(cf_word(ones, 2).str() == "010");
    CHECK(cf_word(ones, 3).str() == "01001");

    CHECK(cf_word(CFExpansion::parse("cf:2"), 1).str() == "001");
    CHECK(cf_word(CFExpansion::parse("cf:1,2"), 2).str() == "01010");

    // s_j begins with s_{j-1} from j = 2 on
    CFExpansion mixed = CFExpansion::parse("cf:1,2,3,...");
    for (long j = 2; j <= 12; ++j) {
        Word prev = cf_word(mixed, j - 1);
        Word cur = cf_word(mixed, j);
        REQUIRE(cur.size() > prev.size());
        bool prefix = true;
        for (std::uint64_t i = 0; i < prev.size() && prefix; ++i)
            prefix = (cur[i] == prev[i]);
        CHECK(prefix);
    }
}

TEST_CASE("all-ones quotients rebuild the fibonacci word") {
    CFExpansion fib_cf = CFExpansion::parse("cf:1,...");
    Word s10 = cf_word(fib_cf, 10);
    CHECK(s10.size() == 144);
    CHECK(s10 == fibonacci_prefix(144));
}

TEST_CASE("continued-fraction parsing and limits") {
    CFExpansion rep = CFExpansion::parse("cf:4,...");
    CHECK(rep.at(1) == 4);
    CHECK(rep.at(100) == 4);
    CFExpansion fixed = CFExpansion::parse("cf:2,7");
    CHECK(fixed.at(2) == 7);
    CHECK_THROWS_AS(fixed.at(3), Error);

    CHECK_THROWS_AS(CFExpansion::parse("cf:0,1"), Error);
    CHECK_THROWS_AS(CFExpansion::parse("cf:1000001"), Error);
    CHECK_THROWS_AS(CFExpansion::parse("cf:"), Error);
    CHECK_THROWS_AS(CFExpansion::parse("cf:..."), Error);
    CHECK_THROWS_AS(CFExpansion::parse("1,2"), Error);
    CHECK_THROWS_AS(cf_word(CFExpansion::parse("cf:1,1"), -2), Error);

    // predicted length overflows the budget long before materialization
    CHECK_THROWS_AS(cf_word(CFExpansion::parse("cf:1000000,..."), 5), Error);
    try {
        cf_word(CFExpansion::parse("cf:1000000,..."), 5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
}

TEST_CASE("convention search singles out the right constructions") {
    std::vector<SlopeCandidate> grid = standard_candidate_grid();
    REQUIRE(grid.size() == 8);

    // with beta = alpha irrational, alpha*n + beta is never an integer, so the
    // floor and ceil variants coincide everywhere and both reproduce the target
    std::vector<SlopeCandidate> fib = slope_match_search(fibonacci_prefix(200), grid);
    REQUIRE(fib.size() == 2);
    for (const SlopeCandidate& c : fib) {
        CHECK(c.alpha.to_string() == "surd:3,-1,5,2");
        CHECK(c.beta.to_string() == "=alpha");
    }
    CHECK(fib[0].variant == MechanicalVariant::Floor);
    CHECK(fib[1].variant == MechanicalVariant::Ceil);

    Word pair = Word::parse(alphabet_sigma(2), "11");
    std::vector<SlopeCandidate> two = slope_match_search(pair, grid);
    REQUIRE(two.size() == 1);
    CHECK(two[0].alpha.to_string() == "surd:-1,1,5,2");
    CHECK(two[0].beta.to_string() == "0");
    CHECK(two[0].variant == MechanicalVariant::Ceil);

    Word triple = Word::parse(alphabet_sigma(2), "111");
    CHECK(slope_match_search(triple, grid).empty());

    CHECK_THROWS_AS(slope_match_search(Word::parse(alphabet_sigma(2), ""), grid), Error);
}
