#include "bmg/gen.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bmg {

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept { return master ^ mix64(index); }

std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
    return perm;
}

BipartiteMultigraph gen_k2_multi(Multiplicity q) {
    if (q < 1) throw std::invalid_argument("gen_k2_multi: q must be at least 1");
    return BipartiteMultigraph(std::vector<std::vector<Multiplicity>>{{q}});
}

BipartiteMultigraph gen_inflated_cycle(std::size_t len, Multiplicity q) {
    if (len < 4 || len % 2 != 0) throw std::invalid_argument("gen_inflated_cycle: len must be even and at least 4");
    if (q < 2) throw std::invalid_argument("gen_inflated_cycle: q must be at least 2");
    const std::size_t m = len / 2;
    std::vector<std::vector<Multiplicity>> rows(m, std::vector<Multiplicity>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        rows[i][i] = q - 1;
        rows[(i + 1) % m][i] = 1;
    }
    return BipartiteMultigraph(std::move(rows));
}

BipartiteMultigraph gen_complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gen_complete: n must be at least 1");
    return BipartiteMultigraph(std::vector<std::vector<Multiplicity>>(n, std::vector<Multiplicity>(n, 1)));
}

BipartiteMultigraph gen_random_permutation_model(std::size_t n, std::size_t q, SplitMix64& rng) {
    if (n < 1 || q < 1) throw std::invalid_argument("gen_random_permutation_model: n and q must be at least 1");
    std::vector<std::vector<Multiplicity>> rows(n, std::vector<Multiplicity>(n, 0));
    for (std::size_t k = 0; k < q; ++k) {
        const auto sigma = random_permutation(n, rng);
        for (std::size_t i = 0; i < n; ++i) ++rows[i][sigma[i]];
    }
    return BipartiteMultigraph(std::move(rows));
}

BipartiteMultigraph gen_random_permutation_model(std::size_t n, std::size_t q, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return gen_random_permutation_model(n, q, rng);
}

std::optional<BipartiteMultigraph> gen_random_simple(std::size_t n, std::size_t q, SplitMix64& rng,
                                                     std::uint64_t max_tries) {
    if (q > n) throw std::invalid_argument("gen_random_simple: q must not exceed n");
    const bool complement = 2 * q > n;
    const std::size_t k = complement ? n - q : q;
    for (std::uint64_t t = 0; t < max_tries; ++t) {
        if (k == 0) return gen_complete(n);
        auto g = gen_random_permutation_model(n, k, rng);
        if (!g.is_simple()) continue;
        if (!complement) return g;
        auto rows = g.rows();
        for (auto& row : rows)
            for (auto& x : row) x = 1 - x;
        return BipartiteMultigraph(std::move(rows));
    }
    return std::nullopt;
}

std::optional<BipartiteMultigraph> gen_random_simple(std::size_t n, std::size_t q, std::uint64_t seed,
                                                     std::uint64_t max_tries) {
    SplitMix64 rng(seed);
    return gen_random_simple(n, q, rng, max_tries);
}

namespace {

struct RegularEnumerator {
    std::size_t n;
    std::vector<std::vector<Multiplicity>> candidates;  // rows with q ones, lexicographic
    std::vector<std::vector<Multiplicity>> rows;
    std::vector<std::size_t> col_left;
    std::size_t q;
    const std::function<bool(const BipartiteMultigraph&)>& visit;

    bool run(std::size_t r) {
        if (r == n) return visit(BipartiteMultigraph(rows));
        const std::size_t rows_left = n - r;
        for (const auto& cand : candidates) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) {
                const std::size_t after = col_left[j] - static_cast<std::size_t>(cand[j]);
                // column j still needs `after` ones from rows_left - 1 rows
                ok = cand[j] <= static_cast<Multiplicity>(col_left[j]) && after <= rows_left - 1;
            }
            if (!ok) continue;
            for (std::size_t j = 0; j < n; ++j) col_left[j] -= static_cast<std::size_t>(cand[j]);
            rows[r] = cand;
            const bool more = run(r + 1);
            for (std::size_t j = 0; j < n; ++j) col_left[j] += static_cast<std::size_t>(cand[j]);
            if (!more) return false;
        }
        return true;
    }
};

}  // namespace

void enumerate_labeled_regular(std::size_t n, std::size_t q,
                               const std::function<bool(const BipartiteMultigraph&)>& visit) {
    if (n > kEnumerateCap) throw LimitExceeded("enumerate_labeled_regular: n above cap " + std::to_string(kEnumerateCap));
    if (q > n) return;
    if (n == 0) {
        visit(BipartiteMultigraph(0, 0));
        return;
    }
    RegularEnumerator e{n, {}, std::vector<std::vector<Multiplicity>>(n), std::vector<std::size_t>(n, q), q, visit};
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != q) continue;
        std::vector<Multiplicity> row(n);
        // bit (n-1-j) is column j, so increasing mask is increasing lexicographic order
        for (std::size_t j = 0; j < n; ++j) row[j] = (mask >> (n - 1 - j)) & 1;
        e.candidates.push_back(std::move(row));
    }
    e.run(0);
}

std::vector<BipartiteMultigraph> enumerate_labeled_regular(std::size_t n, std::size_t q) {
    std::vector<BipartiteMultigraph> out;
    enumerate_labeled_regular(n, q, [&](const BipartiteMultigraph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

}  // namespace bmg
