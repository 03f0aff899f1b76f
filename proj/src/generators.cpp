#include "wordlab/generators.hpp"

#include "wordlab/error.hpp"

namespace wordlab {

RecursiveSpec RecursiveSpec::ternary_y() {
    Alphabet sigma3 = alphabet_sigma(3);
    return {Word::parse(sigma3, "01"), Word::parse(sigma3, "02")};
}

void validate_spec(const RecursiveSpec& spec) {
    if (spec.seed0.empty() || spec.seed1.empty())
        fail_invalid("RecursiveSpec: seeds must be nonempty");
    if (!(spec.seed0.alphabet() == spec.seed1.alphabet()))
        fail_invalid("RecursiveSpec: seeds over different alphabets");
}

Int recursive_length(const RecursiveSpec& spec, unsigned n) {
    validate_spec(spec);
    Int a(static_cast<unsigned long>(spec.seed0.size()));
    Int b(static_cast<unsigned long>(spec.seed1.size()));
    if (n == 0) return a;
    for (unsigned i = 1; i < n; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return b;
}

namespace {

void check_budget(const RecursiveSpec& spec, unsigned n, std::uint64_t budget) {
    Int len = recursive_length(spec, n);
    if (len > Int(static_cast<unsigned long>(budget)))
        fail_resource("recursive_word: |w_" + std::to_string(n) + "| = " +
                      len.get_str() + " symbols exceeds the budget of " +
                      std::to_string(budget));
}

}  // namespace

Word recursive_word(const RecursiveSpec& spec, unsigned n, std::uint64_t budget) {
    validate_spec(spec);
    check_budget(spec, n, budget);
    if (n == 0) return spec.seed0;
    Word prev = spec.seed0;
    Word cur = spec.seed1;
    for (unsigned i = 2; i <= n; ++i) {
        Word next = cur;
        next.append(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Word recursive_prefix(const RecursiveSpec& spec, std::uint64_t len, std::uint64_t budget) {
    validate_spec(spec);
    if (len > budget)
        fail_resource("recursive_prefix: " + std::to_string(len) +
                      " symbols exceeds the budget of " + std::to_string(budget));
    // w_n is a prefix of w_{n+1} once n >= 2, so grow until long enough.
    unsigned n = 2;
    while (recursive_length(spec, n) < Int(static_cast<unsigned long>(len))) ++n;
    Word full = recursive_word(spec, n, budget * 2 + 4);
    Word out(spec.seed0.alphabet());
    out.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) out.push_back(full[i]);
    return out;
}

Word recursive_blocks_prefix(const RecursiveSpec& spec, unsigned n, std::uint64_t budget) {
    validate_spec(spec);
    if (n < 3) fail_invalid("recursive_blocks_prefix: need n >= 3");
    {
        Int la(static_cast<unsigned long>(spec.seed0.size()));
        Int lb(static_cast<unsigned long>(spec.seed1.size()));
        Int total = 0;
        for (unsigned i = 2; i < n; ++i) {
            Int lc = la + lb;
            total += lc;
            la = lb;
            lb = lc;
        }
        if (total > Int(static_cast<unsigned long>(budget)))
            fail_resource("recursive_blocks_prefix: " + total.get_str() +
                          " symbols exceeds the budget of " + std::to_string(budget));
    }
    Word prev = spec.seed0;
    Word cur = spec.seed1;
    Word out(spec.seed0.alphabet());
    for (unsigned i = 2; i < n; ++i) {
        Word next = cur;
        next.append(prev);
        prev = std::move(cur);
        cur = std::move(next);
        out.append(cur);
    }
    return out;
}

Word fibonacci_prefix(std::uint64_t len) {
    Alphabet sigma2 = alphabet_sigma(2);
    Word prev = Word::parse(sigma2, "1");   // s_{-1}
    Word cur = Word::parse(sigma2, "0");    // s_0
    while (cur.size() < len) {
        Word next = cur;
        next.append(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    Word out(sigma2);
    out.reserve(len);
    for (std::uint64_t i = 0; i < len; ++i) out.push_back(cur[i]);
    return out;
}

}  // namespace wordlab
