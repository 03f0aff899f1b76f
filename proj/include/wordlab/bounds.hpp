#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordlab/generators.hpp"
#include "wordlab/quadratic.hpp"
#include "wordlab/verdict.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

// One checked inequality instance, with both sides rendered exactly and as
// decimals so reports stay reproducible.
struct BoundReport {
    std::string claim;
    std::string params;
    std::string interpretation;
    std::string left_exact;
    std::string right_exact;
    std::string left_decimal;
    std::string right_decimal;
    BoundVerdict verdict = BoundVerdict::Undefined;
    std::string note;
};

// Readings of the logarithmic growth bound "1 <= log(...)".
enum class LogInterp {
    RowRatioNaturalLog,   // ln of the length ratio L_n / L_{n-1}
    RowRatioLog10,        // log10 of the same ratio
    LiteralPowersNaturalLog,  // ln((2^n + 2) / 4^(n-1)) with counts from n = 2
};

const char* log_interp_name(LogInterp interp);

// Checks 1 <= log(ratio) for the requested reading at index n, deciding the
// verdict exactly and attaching double-precision decimals for display.
BoundReport log_density_check(const RecursiveSpec& spec, unsigned n, LogInterp interp);

// Density of the interior of a word versus the word itself and the constants
// 1/phi1 and 2/phi1, where phi1 is the golden ratio. Densities here are
// palindromic-prefix tail estimates with the given tail length.
std::vector<BoundReport> interior_density_bounds(const Word& w, std::size_t tail);

// How the single-word density in the paired-subword report is computed, over
// the tail of the word starting at start_index.
enum class TailDensityMode {
    SymbolValue,  // largest symbol value in the tail
    Frequency,    // frequency of that largest symbol within the tail
};

struct PairedSubwordTerm {
    std::string label;
    std::string value_exact;
    std::string value_decimal;
    bool defined = false;
    std::string note;
};

struct PairedSubwordReport {
    std::string word;
    std::string doubled;          // each symbol written twice
    std::string interior;         // word with first and last symbol removed
    std::string doubled_interior;
    TailDensityMode mode = TailDensityMode::SymbolValue;
    std::size_t start_index = 0;
    std::vector<PairedSubwordTerm> terms;
    std::string constant_exact;   // 2/phi1
    std::string constant_decimal;
    BoundVerdict verdict = BoundVerdict::Undefined;
    std::string note;
};

// Evaluates the five-term sum of subword densities against 2/phi1. The sum
// mixes words of different lengths, so some terms are undefined; the report
// names each one and the overall verdict is undefined.
PairedSubwordReport paired_subword_report(const Word& w, TailDensityMode mode,
                                          std::size_t start_index);

// Exact bracket checks used for log verdicts: ln(x) >= 1 iff x >= e.
bool ratio_at_least_e(const Rat& ratio);
bool ratio_at_least_ten(const Rat& ratio);

}  // namespace wordlab
