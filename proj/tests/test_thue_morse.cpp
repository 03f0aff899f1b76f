#include "doctest.h"

#include <cstdint>

#include "wordlab/error.hpp"
#include "wordlab/thue_morse.hpp"
#include "wordlab/word.hpp"

using namespace wordlab;

TEST_CASE("the two generators agree and start correctly") {
    CHECK(tm_prefix(16, TmGenerator::Recurrence).str() == "0110100110010110");
    CHECK(tm_prefix(0, TmGenerator::Recurrence).empty());
    CHECK(tm_prefix(1, TmGenerator::Morphism).str() == "0");
    for (std::uint64_t len : {1, 2, 3, 100, 1023, 16384}) {
        CHECK(tm_prefix(len, TmGenerator::Recurrence) ==
              tm_prefix(len, TmGenerator::Morphism));
    }
}

TEST_CASE("closed-form prefix counts match a direct scan") {
    const Word w = tm_prefix(1 << 16, TmGenerator::Recurrence);
    std::uint64_t zeros = 0;
    for (std::uint64_t n = 1; n <= w.size(); ++n) {
        zeros += (w[n - 1] == 0);
        TmCounts c = tm_counts(n);
        CHECK(c.zeros == Int(zeros));
        CHECK(c.ones == Int(n - zeros));
        CHECK(c.n == n);
    }
    CHECK(tm_counts(0).zeros == 0);
    CHECK(tm_counts(5).zeros == 2);
    CHECK(tm_counts(5).ones == 3);
}

TEST_CASE("prefix counts split at the largest power of two") {
    // with n = 2^k + m, 0 < m <= 2^k, k >= 1: zeros(n) = 2^(k-1) + ones(m)
    // and ones(n) = 2^(k-1) + (m - ones(m))
    for (std::uint64_t n = 3; n <= 100000; ++n) {
        int k = 63;
        while ((std::uint64_t(1) << k) > n) --k;
        std::uint64_t pk = std::uint64_t(1) << k;
        if (pk == n) { --k; pk >>= 1; }
        std::uint64_t m = n - pk;
        Int half(pk >> 1);
        CHECK(tm_counts(n).zeros == half + tm_counts(m).ones);
        CHECK(tm_counts(n).ones == half + Int(m) - tm_counts(m).ones);
    }
}

TEST_CASE("power-of-two prefixes are balanced") {
    for (int k = 1; k <= 20; ++k) {
        std::uint64_t pk = std::uint64_t(1) << k;
        TmCounts c = tm_counts(pk);
        CHECK(c.zeros == Int(pk >> 1));
        CHECK(c.ones == Int(pk >> 1));
    }
}

TEST_CASE("complement flips the binary alphabet only") {
    Word w = Word::parse(alphabet_sigma(2), "0110");
    CHECK(complement(w).str() == "1001");
    CHECK(complement(complement(w)) == w);
    CHECK_THROWS_AS(complement(Word::parse(alphabet_sigma(3), "012")), Error);
}

TEST_CASE("sandwich sweep reports no violations and covers the block structure") {
    TmBoundsReport rep = tm_bounds_check(1 << 16);
    CHECK(rep.n_max == (1 << 16));
    CHECK(rep.first_checked == 2);
    CHECK(rep.violations.empty());
    CHECK(rep.power_of_two_checks == 16);
    CHECK(rep.complement_blocks == 16);
    CHECK(rep.elapsed_seconds >= 0.0);
    CHECK(!rep.note.empty());

    TmBoundsReport tiny = tm_bounds_check(1);
    CHECK(tiny.violations.empty());
    CHECK(tiny.power_of_two_checks == 0);
    CHECK_THROWS_AS(tm_bounds_check(0), Error);
}

TEST_CASE("the sandwich bounds themselves hold by direct count") {
    const Word w = tm_prefix(1 << 14, TmGenerator::Recurrence);
    std::uint64_t zeros = 0;
    for (std::uint64_t n = 1; n < w.size(); ++n) {
        zeros += (w[n - 1] == 0);
        if (n < 2) continue;
        int k = 63;
        while ((std::uint64_t(1) << k) > n) --k;
        std::uint64_t pk = std::uint64_t(1) << k;
        std::uint64_t lo = pk >> 1;
        std::uint64_t hi = lo + (n - pk);
        CHECK(zeros >= lo);
        CHECK(zeros <= hi);
    }
}
