#pragma once

#include <vector>

#include "wordlab/generators.hpp"
#include "wordlab/quadratic.hpp"

namespace wordlab {

// Per-letter counts of w_n, computed by the vector recurrence
// v_n = v_{n-1} + v_{n-2} without materializing the word.
struct CountVector {
    unsigned n = 0;
    std::vector<Int> counts;  // indexed by symbol
    Int total;
};

CountVector counts_recursive(const RecursiveSpec& spec, unsigned n);

struct DensityRecord {
    unsigned n = 0;
    Int total;
    std::vector<Int> counts;
    std::vector<Rat> densities;  // counts / total, canonical
};

DensityRecord density_record(const RecursiveSpec& spec, unsigned n);
std::vector<DensityRecord> density_series(const RecursiveSpec& spec, unsigned n_max);

// Exact letter-density limits. Counts satisfy v_n = f_{n-1} v_0 + f_n v_1,
// so each density tends to (c_0 + phi c_1) / (L_0 + phi L_1) with phi the
// golden ratio.
std::vector<Quad> limit_densities(const RecursiveSpec& spec);

// Rows (n, |w_n|, zeros, ones, twos) for the ternary system.
struct CountTableRow {
    unsigned n = 0;
    Int length;
    Int zeros, ones, twos;
};

std::vector<CountTableRow> table2_rows(unsigned n_lo, unsigned n_hi);

}  // namespace wordlab
