#include "wordlab/thue_morse.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <mutex>

#include "wordlab/error.hpp"
#include "wordlab/morphism.hpp"
#include "wordlab/parallel.hpp"

namespace wordlab {

Word tm_prefix(std::uint64_t len, TmGenerator generator) {
    if (generator == TmGenerator::Morphism) {
        if (len == 0) return Word(alphabet_sigma(2));
        return fixed_point_prefix(thue_morse_morphism(), 0, len);
    }
    Word w(alphabet_sigma(2));
    w.reserve(len);
    if (len == 0) return w;
    w.push_back(0);
    for (std::uint64_t i = 1; i < len; ++i) w.push_back(w[i >> 1] ^ int(i & 1));
    return w;
}

namespace {

// ones(n) for the length-n prefix; recursion depth is the bit length of n.
std::uint64_t tm_ones(std::uint64_t n) {
    if (n <= 1) return 0;
    int k = std::bit_width(n) - 1;
    std::uint64_t pk = std::uint64_t(1) << k;
    std::uint64_t m = n - pk;
    std::uint64_t anchor = pk >> 1;  // alpha_{2^k} = 2^{k-1}, k >= 1
    return anchor + (m - tm_ones(m));
}

}  // namespace

TmCounts tm_counts(std::uint64_t n) {
    TmCounts c;
    c.n = n;
    std::uint64_t ones = tm_ones(n);
    c.ones = Int(ones);
    c.zeros = Int(n - ones);
    return c;
}

Word complement(const Word& w) {
    if (w.alphabet().size() != 2)
        fail_invalid("complement: defined only on the binary alphabet");
    Word out(w.alphabet());
    out.reserve(w.size());
    for (std::uint64_t i = 0; i < w.size(); ++i) out.push_back(1 - w[i]);
    return out;
}

TmBoundsReport tm_bounds_check(std::uint64_t n_max) {
    if (n_max < 1) fail_invalid("tm_bounds_check: n_max must be at least 1");
    auto t0 = std::chrono::steady_clock::now();

    TmBoundsReport rep;
    rep.n_max = n_max;
    rep.note =
        "n = 1 is excluded from the sweep: the lower and upper bounds both "
        "equal 1/2 there while the zero count is 1; the sandwich holds from "
        "n = 2 on";

    const Word w = tm_prefix(n_max, TmGenerator::Recurrence);

    std::vector<std::vector<std::uint64_t>> found;
    std::mutex found_mutex;
    if (n_max >= 2) {
        std::uint64_t total = n_max - 1;  // n in [2, n_max]
        parallel_chunks(total, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
            std::uint64_t n0 = 2 + begin;
            std::uint64_t zeros =
                mpz_get_ui(tm_counts(n0 - 1).zeros.get_mpz_t());
            std::vector<std::uint64_t> bad;
            for (std::uint64_t n = n0; n < 2 + end; ++n) {
                zeros += (w[n - 1] == 0);
                int k = std::bit_width(n) - 1;
                std::uint64_t pk = std::uint64_t(1) << k;
                std::uint64_t lo = pk >> 1;
                std::uint64_t hi = lo + (n - pk);
                if (zeros < lo || zeros > hi) bad.push_back(n);
            }
            if (!bad.empty()) {
                std::lock_guard<std::mutex> lock(found_mutex);
                found.push_back(std::move(bad));
            }
        });
    }
    for (const auto& chunk : found)
        rep.violations.insert(rep.violations.end(), chunk.begin(), chunk.end());

    for (int k = 1; (std::uint64_t(1) << k) <= n_max; ++k) {
        std::uint64_t pk = std::uint64_t(1) << k;
        TmCounts c = tm_counts(pk);
        if (c.zeros != Int(pk >> 1) || c.ones != Int(pk >> 1))
            rep.violations.push_back(pk);
        ++rep.power_of_two_checks;
    }

    for (int k = 0; (std::uint64_t(2) << k) <= n_max; ++k) {
        std::uint64_t pk = std::uint64_t(1) << k;
        bool ok = true;
        for (std::uint64_t i = 0; i < pk && ok; ++i)
            if (w[pk + i] != 1 - w[i]) ok = false;
        if (!ok) rep.violations.push_back(2 * pk);
        ++rep.complement_blocks;
    }
    std::sort(rep.violations.begin(), rep.violations.end());
    rep.violations.erase(std::unique(rep.violations.begin(), rep.violations.end()),
                         rep.violations.end());

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace wordlab
