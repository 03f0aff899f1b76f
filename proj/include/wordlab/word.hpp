#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wordlab/numeric.hpp"

namespace wordlab {

// Ordered alphabet {0, 1, ..., k-1}. Symbols render as 0-9 then a-z.
class Alphabet {
  public:
    explicit Alphabet(unsigned size);

    unsigned size() const { return size_; }
    char glyph(unsigned symbol) const;
    // Symbol for a glyph, or -1 when the glyph is out of range.
    int symbol(char glyph) const;

    bool operator==(const Alphabet& o) const { return size_ == o.size_; }

  private:
    unsigned size_;
};

// Sigma_k, the canonical k-letter alphabet.
Alphabet alphabet_sigma(unsigned k);

// Finite word over an Alphabet. Symbols are packed two bits each for
// alphabets of at most four letters and stored as bytes otherwise, so
// binary and ternary words of a billion symbols stay affordable.
class Word {
  public:
    explicit Word(Alphabet alphabet);

    static Word from_symbols(Alphabet alphabet, const std::vector<unsigned>& symbols);
    // Builds a word from glyphs ("0201"). Throws Error(Parse) on a glyph
    // outside the alphabet.
    static Word parse(Alphabet alphabet, std::string_view glyphs);

    const Alphabet& alphabet() const { return alphabet_; }
    std::uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    unsigned operator[](std::uint64_t i) const {
        return packed_ ? static_cast<unsigned>((bits_[i >> 5] >> ((i & 31) * 2)) & 3)
                       : bytes_[i];
    }

    void reserve(std::uint64_t symbols);
    void push_back(unsigned symbol);
    void append(const Word& o);

    std::string str() const;

    bool operator==(const Word& o) const;

  private:
    Alphabet alphabet_;
    bool packed_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> bits_;   // packed storage, unused tail bits zero
    std::vector<std::uint8_t> bytes_;   // plain storage
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

// The word with first and last symbol removed. Requires |w| >= 2.
Word interior(const Word& w);

// Occurrences of each symbol, indexed by symbol.
std::vector<std::uint64_t> letter_counts(const Word& w);

}  // namespace wordlab
