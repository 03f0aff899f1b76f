#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordlab/numeric.hpp"
#include "wordlab/quadratic.hpp"
#include "wordlab/verdict.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

// Lengths of all palindromic prefixes of w, strictly increasing.
// Linear in |w| (radius propagation over odd and even centers).
std::vector<std::uint64_t> palindromic_prefix_lengths(const Word& w);

// Quadratic reference implementation used to cross-check the fast one.
std::vector<std::uint64_t> palindromic_prefix_lengths_naive(const Word& w);

// Finite-horizon estimate of the palindromic prefix density
// liminf n_i / n_{i+1}: the smallest ratio n_i / n_{i+1} among the last
// `tail` consecutive pairs of lengths. Fewer than two lengths give 0.
Rat densp_estimate(const std::vector<std::uint64_t>& lengths, std::size_t tail);

struct PalindromeDensityReport {
    std::string source;
    std::uint64_t horizon = 0;
    std::vector<std::uint64_t> lengths;
    std::size_t tail = 0;
    Rat estimate;
    Quad bound;  // (sqrt(5) - 1) / 2
    BoundVerdict verdict = BoundVerdict::Undefined;
    std::string note;
};

// Compares the tail estimate against (sqrt(5)-1)/2. An estimate above the
// bound is reported as a precondition note rather than a violation: the bound
// presumes a word that begins with arbitrarily long palindromes and is not
// ultimately periodic, and a finite-horizon estimator cannot certify that.
PalindromeDensityReport palindrome_density_check(std::string source, const Word& w,
                                                 std::size_t tail);

}  // namespace wordlab
