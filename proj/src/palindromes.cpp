#include "wordlab/palindromes.hpp"

#include <algorithm>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

// Symbol at position j of the virtual string #w0#w1#...#w{n-1}# of length
// 2n+1. Separator positions (even j) all compare equal; -1 never collides
// with a symbol value.
inline int virtual_at(const Word& w, std::uint64_t j) {
    return (j & 1) ? w[(j - 1) / 2] : -1;
}

}  // namespace

std::vector<std::uint64_t> palindromic_prefix_lengths(const Word& w) {
    std::uint64_t n = w.size();
    if (n > 0x7fffffffull)
        fail_resource("palindromic_prefix_lengths: word too long for radius table");
    std::vector<std::uint64_t> out;
    if (n == 0) return out;

    std::uint64_t m = 2 * n + 1;
    std::vector<std::uint32_t> radius(m, 0);
    std::uint64_t center = 0, right = 0;
    for (std::uint64_t j = 1; j < m; ++j) {
        std::uint64_t r = 0;
        if (j < right) {
            std::uint64_t mirror = 2 * center - j;
            r = std::min<std::uint64_t>(radius[mirror], right - j);
        }
        while (r + 1 <= j && j + r + 1 < m &&
               virtual_at(w, j - r - 1) == virtual_at(w, j + r + 1))
            ++r;
        radius[j] = static_cast<std::uint32_t>(r);
        if (j + r > right) {
            center = j;
            right = j + r;
        }
    }
    for (std::uint64_t len = 1; len <= n; ++len)
        if (radius[len] == len) out.push_back(len);
    return out;
}

std::vector<std::uint64_t> palindromic_prefix_lengths_naive(const Word& w) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t len = 1; len <= w.size(); ++len) {
        bool pal = true;
        for (std::uint64_t i = 0; i < len / 2; ++i) {
            if (w[i] != w[len - 1 - i]) {
                pal = false;
                break;
            }
        }
        if (pal) out.push_back(len);
    }
    return out;
}

Rat densp_estimate(const std::vector<std::uint64_t>& lengths, std::size_t tail) {
    if (tail == 0) fail_invalid("densp_estimate: tail must be at least 1");
    if (lengths.size() < 2) return Rat(0);
    std::size_t pairs = std::min(tail, lengths.size() - 1);
    std::size_t first = lengths.size() - 1 - pairs;
    Rat best;
    bool have = false;
    for (std::size_t i = first; i + 1 < lengths.size(); ++i) {
        Rat ratio = make_rat(Int(lengths[i]), Int(lengths[i + 1]));
        if (!have || ratio < best) {
            best = ratio;
            have = true;
        }
    }
    return best;
}

PalindromeDensityReport palindrome_density_check(std::string source, const Word& w,
                                                 std::size_t tail) {
    PalindromeDensityReport rep;
    rep.source = std::move(source);
    rep.horizon = w.size();
    rep.lengths = palindromic_prefix_lengths(w);
    rep.tail = tail;
    rep.estimate = densp_estimate(rep.lengths, tail);
    rep.bound = Quad::surd(Rat(-1, 2), Rat(1, 2), Int(5));
    rep.note =
        "estimate is the smallest ratio between consecutive palindromic prefix "
        "lengths over the final " +
        std::to_string(tail) +
        " pairs; it tracks the density liminf only when long palindromic "
        "prefixes keep appearing";
    if ((Quad(rep.estimate) - rep.bound).sign() <= 0) {
        rep.verdict = BoundVerdict::Holds;
    } else {
        rep.verdict = BoundVerdict::PreconditionNote;
        rep.note +=
            "; the estimate exceeds (sqrt(5)-1)/2, which the bound only rules "
            "out for words that begin with arbitrarily long palindromes and are "
            "not ultimately periodic, so the input likely violates that "
            "precondition";
    }
    return rep;
}

}  // namespace wordlab
