#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

// Substitution sending each symbol of an alphabet to a word over the same
// alphabet. Images may be empty; fixed-point generation additionally needs
// every image nonempty and a prolongable seed.
class Morphism {
  public:
    Morphism(Alphabet alphabet, std::vector<Word> images);

    const Alphabet& alphabet() const { return alphabet_; }
    const Word& image(unsigned symbol) const;

    // Text format: one "<symbol> -> <image>" rule per line, both sides in
    // glyphs, '#' starts a comment, blank lines are skipped. The rules must
    // define every symbol of the inferred alphabet exactly once. Errors
    // report 1-based line numbers.
    static Morphism parse(std::string_view text);
    static Morphism parse_file(const std::string& path);

  private:
    Alphabet alphabet_;
    std::vector<Word> images_;
};

Word apply_morphism(const Morphism& m, const Word& w);

// First `len` symbols of the fixed point starting from `seed`. Requires the
// morphism to be prolongable there: image(seed) begins with seed, has length
// at least 2, and no image is empty.
Word fixed_point_prefix(const Morphism& m, unsigned seed, std::uint64_t len);

// 0 -> 01, 1 -> 0.
Morphism fibonacci_morphism();
// 0 -> 01, 1 -> 10.
Morphism thue_morse_morphism();

}  // namespace wordlab
