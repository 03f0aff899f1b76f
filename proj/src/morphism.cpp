#include "wordlab/morphism.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "wordlab/error.hpp"

namespace wordlab {

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(alphabet), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
        fail_invalid("Morphism: need one image per symbol");
    for (const Word& w : images_)
        if (!(w.alphabet() == alphabet_))
            fail_invalid("Morphism: image over a different alphabet");
}

const Word& Morphism::image(unsigned symbol) const {
    if (symbol >= alphabet_.size()) fail_invalid("Morphism: symbol out of range");
    return images_[symbol];
}

namespace {

int glyph_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

struct Rule {
    int line;
    int symbol;
    std::string image;
};

[[noreturn]] void fail_line(int line, const std::string& what) {
    fail_parse("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Morphism Morphism::parse(std::string_view text) {
    std::vector<Rule> rules;
    int max_symbol = -1;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        };
        skip_ws();
        if (i == line.size()) continue;
        int sym = glyph_value(line[i]);
        if (sym < 0) fail_line(line_no, std::string("bad symbol '") + line[i] + "'");
        ++i;
        skip_ws();
        if (line.compare(i, 2, "->") != 0) fail_line(line_no, "expected '->' after symbol");
        i += 2;
        skip_ws();
        std::string image;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            if (glyph_value(line[i]) < 0)
                fail_line(line_no, std::string("bad image glyph '") + line[i] + "'");
            image.push_back(line[i]);
            ++i;
        }
        skip_ws();
        if (i != line.size()) fail_line(line_no, "trailing text after image");
        for (char c : image) max_symbol = std::max(max_symbol, glyph_value(c));
        max_symbol = std::max(max_symbol, sym);
        rules.push_back({line_no, sym, std::move(image)});
    }
    if (rules.empty()) fail_parse("morphism text has no rules");
    Alphabet alphabet(static_cast<unsigned>(max_symbol + 1));
    std::vector<int> defined_at(alphabet.size(), 0);
    std::vector<Word> images(alphabet.size(), Word(alphabet));
    for (const Rule& r : rules) {
        if (defined_at[r.symbol])
            fail_line(r.line, std::string("symbol '") + alphabet.glyph(r.symbol) +
                                  "' already defined on line " +
                                  std::to_string(defined_at[r.symbol]));
        defined_at[r.symbol] = r.line;
        images[r.symbol] = Word::parse(alphabet, r.image);
    }
    for (unsigned s = 0; s < alphabet.size(); ++s)
        if (!defined_at[s])
            fail_parse(std::string("no rule for symbol '") + alphabet.glyph(s) + "'");
    return Morphism(alphabet, std::move(images));
}

Morphism Morphism::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_invalid("cannot open morphism file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse(buf.str());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse)
            throw Error(ErrorKind::Parse, path + ": " + e.what());
        throw;
    }
}

Word apply_morphism(const Morphism& m, const Word& w) {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> counts = letter_counts(w);
    for (unsigned s = 0; s < counts.size(); ++s) total += counts[s] * m.image(s).size();
    Word out(m.alphabet());
    out.reserve(total);
    for (std::uint64_t i = 0; i < w.size(); ++i) out.append(m.image(w[i]));
    return out;
}

Word fixed_point_prefix(const Morphism& m, unsigned seed, std::uint64_t len) {
    if (seed >= m.alphabet().size()) fail_invalid("fixed_point_prefix: seed out of range");
    const Word& first = m.image(seed);
    if (first.size() < 2 || first[0] != seed)
        fail_invalid("fixed_point_prefix: morphism is not prolongable at the seed");
    for (unsigned s = 0; s < m.alphabet().size(); ++s)
        if (m.image(s).empty())
            fail_invalid("fixed_point_prefix: erasing morphism");
    Word out(m.alphabet());
    if (len == 0) return out;
    out.reserve(len);
    out.append(first);
    // out always equals the image of its own first `read` symbols, and stays
    // strictly longer than `read`, so expanding symbol by symbol never stalls.
    std::uint64_t read = 1;
    while (out.size() < len) {
        out.append(m.image(out[read]));
        ++read;
    }
    if (out.size() == len) return out;
    Word trimmed(m.alphabet());
    trimmed.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) trimmed.push_back(out[i]);
    return trimmed;
}

Morphism fibonacci_morphism() {
    return Morphism::parse("0 -> 01\n1 -> 0\n");
}

Morphism thue_morse_morphism() {
    return Morphism::parse("0 -> 01\n1 -> 10\n");
}

}  // namespace wordlab
