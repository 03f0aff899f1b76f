#include "wordlab/counting.hpp"

#include "wordlab/error.hpp"
#include "wordlab/parallel.hpp"

namespace wordlab {

CountVector counts_recursive(const RecursiveSpec& spec, unsigned n) {
    validate_spec(spec);
    unsigned k = spec.seed0.alphabet().size();
    auto to_ints = [k](const Word& w) {
        std::vector<Int> v(k);
        std::vector<std::uint64_t> c = letter_counts(w);
        for (unsigned s = 0; s < k; ++s) v[s] = Int(static_cast<unsigned long>(c[s]));
        return v;
    };
    std::vector<Int> prev = to_ints(spec.seed0);
    std::vector<Int> cur = to_ints(spec.seed1);
    if (n == 0) cur = prev;
    for (unsigned i = 2; i <= n; ++i) {
        for (unsigned s = 0; s < k; ++s) {
            Int next = cur[s] + prev[s];
            prev[s] = cur[s];
            cur[s] = next;
        }
    }
    CountVector out;
    out.n = n;
    out.counts = cur;
    out.total = 0;
    for (const Int& c : out.counts) out.total += c;
    return out;
}

DensityRecord density_record(const RecursiveSpec& spec, unsigned n) {
    CountVector cv = counts_recursive(spec, n);
    if (cv.total == 0) fail_invalid("density_record: empty word at n=" + std::to_string(n));
    DensityRecord rec;
    rec.n = n;
    rec.total = cv.total;
    rec.counts = cv.counts;
    for (const Int& c : cv.counts) rec.densities.push_back(make_rat(c, cv.total));
    return rec;
}

std::vector<DensityRecord> density_series(const RecursiveSpec& spec, unsigned n_max) {
    std::vector<DensityRecord> out(n_max + 1);
    parallel_chunks(n_max + 1, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t n = begin; n < end; ++n)
            out[n] = density_record(spec, static_cast<unsigned>(n));
    });
    return out;
}

std::vector<Quad> limit_densities(const RecursiveSpec& spec) {
    validate_spec(spec);
    unsigned k = spec.seed0.alphabet().size();
    std::vector<std::uint64_t> c0 = letter_counts(spec.seed0);
    std::vector<std::uint64_t> c1 = letter_counts(spec.seed1);
    Quad phi = Quad::golden_ratio();
    Quad denom = Quad(Rat(static_cast<unsigned long>(spec.seed0.size()))) +
                 phi * Quad(Rat(static_cast<unsigned long>(spec.seed1.size())));
    std::vector<Quad> out;
    for (unsigned s = 0; s < k; ++s) {
        Quad num = Quad(Rat(static_cast<unsigned long>(c0[s]))) +
                   phi * Quad(Rat(static_cast<unsigned long>(c1[s])));
        out.push_back(num / denom);
    }
    return out;
}

std::vector<CountTableRow> table2_rows(unsigned n_lo, unsigned n_hi) {
    if (n_lo < 2 || n_lo > n_hi)
        fail_invalid("table2_rows: need 2 <= n_lo <= n_hi");
    RecursiveSpec spec = RecursiveSpec::ternary_y();
    std::vector<CountTableRow> rows;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        CountVector cv = counts_recursive(spec, n);
        rows.push_back({n, cv.total, cv.counts[0], cv.counts[1], cv.counts[2]});
    }
    return rows;
}

}  // namespace wordlab
