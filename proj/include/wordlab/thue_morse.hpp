#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordlab/numeric.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

enum class TmGenerator { Recurrence, Morphism };

// First len symbols of the fixed point t = 0110100110010110...
// The two generators are independent and must agree symbol for symbol.
Word tm_prefix(std::uint64_t len, TmGenerator generator);

struct TmCounts {
    std::uint64_t n = 0;
    Int zeros;  // lambda_n
    Int ones;   // alpha_n
};

// Exact zero/one counts of the length-n prefix in O(log n) time, via the
// block decomposition lambda_n = lambda_{2^k} + alpha_m and
// alpha_n = alpha_{2^k} + (m - alpha_m) for n = 2^k + m, 0 <= m < 2^k.
// The printed form of that decomposition swaps the two contributions; the
// form used here is the one that matches materialized prefixes.
TmCounts tm_counts(std::uint64_t n);

// Bitwise complement of a word over the binary alphabet.
Word complement(const Word& w);

struct TmBoundsReport {
    std::uint64_t n_max = 0;
    std::uint64_t first_checked = 2;
    std::vector<std::uint64_t> violations;  // indices n where the sandwich failed
    std::uint64_t power_of_two_checks = 0;
    std::uint64_t complement_blocks = 0;
    double elapsed_seconds = 0.0;
    std::string note;
};

// Sweeps every n in [2, n_max] and checks the exact sandwich
// 2^{k-1}/n <= lambda_n/n <= (2^{k-1}+m)/n with n = 2^k + m, plus the
// power-of-two anchors lambda_{2^k} = alpha_{2^k} = 2^{k-1} (k >= 1) and the
// block identity prefix(2^{k+1}) = prefix(2^k) complement(prefix(2^k)).
// n = 1 is excluded: there the two bounds coincide at 1/2 while lambda_1 = 1.
TmBoundsReport tm_bounds_check(std::uint64_t n_max);

}  // namespace wordlab
