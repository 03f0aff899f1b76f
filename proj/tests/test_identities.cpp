#include "doctest.h"

#include "wordlab/error.hpp"
#include "wordlab/identities.hpp"

using namespace wordlab;

TEST_CASE("fibonacci numbers at both signs of the index") {
    CHECK(fib(0) == 0);
    CHECK(fib(1) == 1);
    CHECK(fib(2) == 1);
    CHECK(fib(10) == 55);
    CHECK(fib(20) == 6765);
    CHECK(fib(-1) == 1);
    CHECK(fib(-2) == -1);
    CHECK(fib(-5) == 5);
    CHECK(fib(-6) == -8);
    CHECK(fib(90) == Int("2880067194370816120"));
}

TEST_CASE("fibonacci index limit is enforced") {
    CHECK_THROWS_AS(fib(1000001), Error);
    CHECK_THROWS_AS(fib(-1000001), Error);
    try {
        fib(501, 500);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
    CHECK(fib(500, 500) > 0);
}

TEST_CASE("addition law ties positive and negative indices together") {
    for (long m = -30; m <= 30; ++m)
        for (long n = -30; n <= 30; ++n)
            CHECK(fib(m + n) == fib(m) * fib(n + 1) + fib(m - 1) * fib(n));
}

TEST_CASE("cassini alternation") {
    for (long n = -300; n <= 300; ++n) {
        Int lhs = fib(n + 1) * fib(n - 1) - fib(n) * fib(n);
        CHECK(lhs == ((n % 2 == 0) ? 1 : -1));
    }
}

TEST_CASE("central binomial coefficients against the stepwise recurrence") {
    CHECK(central_binomial(0) == 1);
    CHECK(central_binomial(1) == 2);
    CHECK(central_binomial(5) == 252);
    Int c = 1;
    for (unsigned long n = 0; n <= 200; ++n) {
        CHECK(central_binomial(n) == c);
        c = c * 2 * (2 * long(n) + 1) / (long(n) + 1);
    }
}

TEST_CASE("claim registry lists the evaluable claims in a fixed order") {
    const std::vector<ClaimInfo>& reg = claim_registry();
    REQUIRE(reg.size() == 7);
    CHECK(reg[0].id == "prop32");
    CHECK(reg[1].id == "core-identity");
    CHECK(reg[2].id == "catalan-eq4");
    CHECK(reg[3].id == "docagne-printed");
    CHECK(reg[4].id == "docagne-standard");
    CHECK(reg[5].id == "safeword-eq2");
    CHECK(reg[6].id == "eq7");
    CHECK(claim_info("prop32").param_names == std::vector<std::string>{"n", "k"});
    CHECK_THROWS_AS(claim_info("nonsense"), Error);
}

TEST_CASE("claim evaluations at pinned parameter points") {
    ClaimReport r = claim_eval("prop32", {1, 4});
    REQUIRE(r.lhs);
    REQUIRE(r.rhs);
    CHECK(*r.lhs == Rat(-2, 7));
    CHECK(*r.rhs == Rat(2));
    CHECK(r.verdict == ClaimVerdict::False);
    CHECK(claim_params_string(r.params) == "n=1;k=4");

    r = claim_eval("core-identity", {4, 7});
    CHECK(*r.lhs == Rat(-441));
    CHECK(*r.rhs == Rat(12));
    CHECK(r.verdict == ClaimVerdict::False);

    r = claim_eval("catalan-eq4", {3, 1});
    CHECK(*r.lhs == *r.rhs);
    CHECK(r.verdict == ClaimVerdict::True);

    r = claim_eval("catalan-eq4", {4, 1});
    CHECK(*r.lhs == Rat(5));
    CHECK(*r.rhs == Rat(0));
    CHECK(r.verdict == ClaimVerdict::False);

    r = claim_eval("docagne-printed", {2, 1});
    CHECK(*r.lhs == Rat(0));
    CHECK(*r.rhs == Rat(1));
    CHECK(r.verdict == ClaimVerdict::False);

    r = claim_eval("safeword-eq2", {4});
    CHECK(*r.lhs == Rat(5));
    CHECK(*r.rhs == Rat(21));
    CHECK(r.verdict == ClaimVerdict::False);

    r = claim_eval("eq7", {1, 4});
    CHECK(*r.lhs == Rat(-21));
    CHECK(*r.rhs == Rat(1));
    CHECK(r.verdict == ClaimVerdict::False);
}

TEST_CASE("negative-index handling changes verdicts where it should") {
    ClaimReport nega = claim_eval("docagne-standard", {1, 3}, FibIndexMode::Negafibonacci);
    CHECK(nega.verdict == ClaimVerdict::True);
    ClaimReport abs = claim_eval("docagne-standard", {1, 3}, FibIndexMode::AbsoluteValue);
    CHECK(abs.verdict == ClaimVerdict::False);
    CHECK(*nega.lhs == *abs.lhs);
    CHECK(*nega.rhs == Rat(1));
    CHECK(*abs.rhs == Rat(-1));
}

TEST_CASE("domain restrictions reject bad parameters") {
    CHECK_THROWS_AS(claim_eval("prop32", {0, 4}), Error);
    CHECK_THROWS_AS(claim_eval("prop32", {1, 3}), Error);
    CHECK_THROWS_AS(claim_eval("catalan-eq4", {2, 1}), Error);
    CHECK_THROWS_AS(claim_eval("safeword-eq2", {1, 2}), Error);  // arity
}

TEST_CASE("the control identity holds across its whole sweep") {
    std::vector<ParamRange> ranges = {
        {"m", {"", 2}, {"", 50}},
        {"n", {"", 1}, {"m", -1}},
    };
    SweepSummary s = claim_sweep("docagne-standard", ranges);
    CHECK(s.cases.size() == 49 * 50 / 2);
    CHECK(s.true_count == s.cases.size());
    CHECK(s.false_count == 0);
    CHECK(s.undefined_count == 0);
}

TEST_CASE("the headline identity fails across its sweep") {
    std::vector<ParamRange> ranges = {
        {"n", {"", 1}, {"", 2}},
        {"k", {"n", 3}, {"n", 4}},
    };
    SweepSummary s = claim_sweep("prop32", ranges);
    REQUIRE(s.cases.size() == 4);
    CHECK(s.false_count == 4);
    CHECK(claim_params_string(s.cases[0].params) == "n=1;k=4");
    CHECK(claim_params_string(s.cases[3].params) == "n=2;k=6");
}

TEST_CASE("sweep rejects malformed ranges") {
    CHECK_THROWS_AS(claim_sweep("prop32", {{"n", {"", 2}, {"", 1}},
                                           {"k", {"n", 3}, {"n", 3}}}),
                    Error);
    CHECK_THROWS_AS(claim_sweep("prop32", {{"n", {"k", 0}, {"", 2}},
                                           {"k", {"", 4}, {"", 5}}}),
                    Error);
    CHECK_THROWS_AS(claim_sweep("safeword-eq2", {}), Error);
}
