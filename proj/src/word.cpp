#include "wordlab/word.hpp"

#include "wordlab/error.hpp"

namespace wordlab {

Alphabet::Alphabet(unsigned size) : size_(size) {
    if (size == 0) fail_invalid("Alphabet: size must be positive");
    if (size > 256) fail_invalid("Alphabet: at most 256 letters supported");
}

char Alphabet::glyph(unsigned symbol) const {
    if (symbol >= size_) fail_invalid("Alphabet: symbol out of range");
    if (symbol < 10) return static_cast<char>('0' + symbol);
    if (symbol < 36) return static_cast<char>('a' + (symbol - 10));
    fail_invalid("Alphabet: no glyph for symbols past 35");
}

int Alphabet::symbol(char glyph) const {
    unsigned s;
    if (glyph >= '0' && glyph <= '9')
        s = static_cast<unsigned>(glyph - '0');
    else if (glyph >= 'a' && glyph <= 'z')
        s = static_cast<unsigned>(glyph - 'a') + 10;
    else
        return -1;
    return s < size_ ? static_cast<int>(s) : -1;
}

Alphabet alphabet_sigma(unsigned k) {
    return Alphabet(k);
}

Word::Word(Alphabet alphabet)
    : alphabet_(alphabet), packed_(alphabet.size() <= 4) {}

Word Word::from_symbols(Alphabet alphabet, const std::vector<unsigned>& symbols) {
    Word w(alphabet);
    w.reserve(symbols.size());
    for (unsigned s : symbols) w.push_back(s);
    return w;
}

Word Word::parse(Alphabet alphabet, std::string_view glyphs) {
    Word w(alphabet);
    w.reserve(glyphs.size());
    for (std::size_t i = 0; i < glyphs.size(); ++i) {
        int s = alphabet.symbol(glyphs[i]);
        if (s < 0)
            fail_parse("Word: glyph '" + std::string(1, glyphs[i]) +
                       "' at position " + std::to_string(i) +
                       " is not in a " + std::to_string(alphabet.size()) +
                       "-letter alphabet");
        w.push_back(static_cast<unsigned>(s));
    }
    return w;
}

void Word::reserve(std::uint64_t symbols) {
    if (packed_)
        bits_.reserve((symbols + 31) / 32);
    else
        bytes_.reserve(symbols);
}

void Word::push_back(unsigned symbol) {
    if (symbol >= alphabet_.size()) fail_invalid("Word: symbol out of range");
    if (packed_) {
        if ((size_ & 31) == 0) bits_.push_back(0);
        bits_[size_ >> 5] |= static_cast<std::uint64_t>(symbol) << ((size_ & 31) * 2);
    } else {
        bytes_.push_back(static_cast<std::uint8_t>(symbol));
    }
    ++size_;
}

void Word::append(const Word& o) {
    if (!(alphabet_ == o.alphabet_)) fail_invalid("Word: append across alphabets");
    if (o.size_ == 0) return;
    if (!packed_) {
        bytes_.insert(bytes_.end(), o.bytes_.begin(), o.bytes_.end());
        size_ += o.size_;
        return;
    }
    std::uint64_t dst_bit = size_ * 2;
    std::uint64_t total_bits = (size_ + o.size_) * 2;
    bits_.resize((total_bits + 63) / 64, 0);
    unsigned shift = static_cast<unsigned>(dst_bit % 64);
    std::size_t base = static_cast<std::size_t>(dst_bit / 64);
    std::size_t src_blocks = (o.size_ * 2 + 63) / 64;
    if (shift == 0) {
        for (std::size_t i = 0; i < src_blocks; ++i) bits_[base + i] = o.bits_[i];
    } else {
        // Tail bits above `shift` are zero by invariant, so plain ORs merge.
        for (std::size_t i = 0; i < src_blocks; ++i) {
            std::uint64_t blk = o.bits_[i];
            bits_[base + i] |= blk << shift;
            if (base + i + 1 < bits_.size()) bits_[base + i + 1] = blk >> (64 - shift);
        }
    }
    size_ += o.size_;
    unsigned used = static_cast<unsigned>((size_ * 2) % 64);
    if (used != 0) bits_.back() &= (~std::uint64_t{0}) >> (64 - used);
}

std::string Word::str() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::uint64_t i = 0; i < size_; ++i) out.push_back(alphabet_.glyph((*this)[i]));
    return out;
}

bool Word::operator==(const Word& o) const {
    if (!(alphabet_ == o.alphabet_) || size_ != o.size_) return false;
    if (packed_) return bits_ == o.bits_;
    return bytes_ == o.bytes_;
}

Word reverse(const Word& w) {
    Word out(w.alphabet());
    out.reserve(w.size());
    for (std::uint64_t i = w.size(); i > 0; --i) out.push_back(w[i - 1]);
    return out;
}

bool is_palindrome(const Word& w) {
    std::uint64_t n = w.size();
    for (std::uint64_t i = 0; i < n / 2; ++i)
        if (w[i] != w[n - 1 - i]) return false;
    return true;
}

Word interior(const Word& w) {
    if (w.size() < 2) fail_invalid("interior: word must have at least 2 symbols");
    Word out(w.alphabet());
    out.reserve(w.size() - 2);
    for (std::uint64_t i = 1; i + 1 < w.size(); ++i) out.push_back(w[i]);
    return out;
}

std::vector<std::uint64_t> letter_counts(const Word& w) {
    std::vector<std::uint64_t> counts(w.alphabet().size(), 0);
    for (std::uint64_t i = 0; i < w.size(); ++i) ++counts[w[i]];
    return counts;
}

}  // namespace wordlab
