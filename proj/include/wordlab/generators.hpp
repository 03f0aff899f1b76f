#pragma once

#include <cstdint>

#include "wordlab/word.hpp"

namespace wordlab {

// Two-seed concatenation system w_n = w_{n-1} w_{n-2} for n >= 2.
struct RecursiveSpec {
    Word seed0;  // w_0
    Word seed1;  // w_1

    // The ternary system with w_0 = 01 and w_1 = 02 whose limit starts
    // 0201020201...
    static RecursiveSpec ternary_y();
};

// Default cap on materialized symbols (2^30).
inline constexpr std::uint64_t kDefaultSymbolBudget = std::uint64_t{1} << 30;

void validate_spec(const RecursiveSpec& spec);

// Length of w_n without materializing it.
Int recursive_length(const RecursiveSpec& spec, unsigned n);

// Materializes w_n. Throws Error(ResourceLimit) naming the offending index
// when |w_n| would exceed the budget.
Word recursive_word(const RecursiveSpec& spec, unsigned n,
                    std::uint64_t budget = kDefaultSymbolBudget);

// First `len` symbols of the limit word lim w_n.
Word recursive_prefix(const RecursiveSpec& spec, std::uint64_t len,
                      std::uint64_t budget = kDefaultSymbolBudget);

// w_2 w_3 ... w_{n-1} concatenated, the block form of the limit word with
// the last block dropped. Requires n >= 3.
Word recursive_blocks_prefix(const RecursiveSpec& spec, unsigned n,
                             std::uint64_t budget = kDefaultSymbolBudget);

// Prefix of the Fibonacci word 0100101001001..., built by the standard-word
// concatenation s_j = s_{j-1} s_{j-2} from s_{-1} = 1, s_0 = 0. This is
// independent of the morphism route on purpose; tests hold the two equal.
Word fibonacci_prefix(std::uint64_t len);

}  // namespace wordlab
