#include <doctest.h>

#include "bmg/antifactor.hpp"
#include "bmg/badness.hpp"
#include "bmg/counting.hpp"
#include "bmg/gen.hpp"
#include "corpus.hpp"

using namespace bmg;

namespace {

BipartiteMultigraph block_diagonal(const BipartiteMultigraph& a, const BipartiteMultigraph& b) {
    const std::size_t n = a.n_u() + b.n_u();
    std::vector<std::vector<Multiplicity>> rows(n, std::vector<Multiplicity>(n, 0));
    for (std::size_t i = 0; i < a.n_u(); ++i)
        for (std::size_t j = 0; j < a.n_u(); ++j) rows[i][j] = a.mult(i, j);
    for (std::size_t i = 0; i < b.n_u(); ++i)
        for (std::size_t j = 0; j < b.n_u(); ++j) rows[a.n_u() + i][a.n_u() + j] = b.mult(i, j);
    return BipartiteMultigraph(rows);
}

}  // namespace

TEST_CASE("enumerate_3regular_spanning") {
    CHECK(count_3regular_spanning(gen_complete(3)) == 1);
    CHECK(count_3regular_spanning(gen_k2_multi(3)) == 1);
    CHECK(count_3regular_spanning(gen_k2_multi(7)) == 1);
    // K44: complements of the 24 permutation matrices
    CHECK(count_3regular_spanning(gen_complete(4)) == 24);
    CHECK(count_3regular_spanning(block_diagonal(gen_k2_multi(4), gen_k2_multi(4))) == 1);
    CHECK(count_3regular_spanning(block_diagonal(gen_complete(4), gen_complete(4))) == 24 * 24);
    CHECK(count_3regular_spanning(block_diagonal(gen_complete(4), gen_k2_multi(4))) == 24);
    // every enumerated matrix is a 3-regular sub-multigraph, and they are distinct
    const auto g = gen_random_permutation_model(6, 5, 17);
    std::vector<BipartiteMultigraph> seen;
    enumerate_3regular_spanning(g, [&](const BipartiteMultigraph& sub) {
        for (std::size_t u = 0; u < 6; ++u)
            for (std::size_t v = 0; v < 6; ++v) REQUIRE(sub.mult(u, v) <= g.mult(u, v));
        REQUIRE(regularity(sub) == 3);
        seen.push_back(sub);
        return true;
    });
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (std::size_t j = i + 1; j < seen.size(); ++j) REQUIRE_FALSE(seen[i] == seen[j]);
    CHECK(!seen.empty());
}

TEST_CASE("enumeration matches brute force on small 4-regular multigraphs") {
    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng.below(3);
        const auto g = gen_random_permutation_model(n, 4, rng);
        // brute force over all sub-matrices 0 <= sub <= g
        std::size_t expected = 0;
        std::vector<Multiplicity> cells(n * n, 0);
        while (true) {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                Multiplicity r = 0, c = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    r += cells[i * n + j];
                    c += cells[j * n + i];
                }
                ok = r == 3 && c == 3;
            }
            if (ok) ++expected;
            std::size_t k = 0;
            for (; k < cells.size(); ++k) {
                if (++cells[k] <= g.mult(k / n, k % n)) break;
                cells[k] = 0;
            }
            if (k == cells.size()) break;
        }
        CHECK(count_3regular_spanning(g) == expected);
    }
}

TEST_CASE("is_bad examples") {
    const auto k2 = is_bad(gen_k2_multi(3));
    CHECK(k2.bad);
    CHECK_FALSE(k2.witness.has_value());
    const auto c4 = is_bad(gen_inflated_cycle(4, 3));
    CHECK_FALSE(c4.bad);
    REQUIRE(c4.witness.has_value());
    CHECK(c4.witness->sub == gen_inflated_cycle(4, 3));
    CHECK(c4.witness->residue == 2);
    CHECK(is_bad(gen_complete(3)).bad);
    // K33 still has the alpha = 1 antifactor: badness only fails a sufficient condition
    CHECK(find_antifactor(gen_complete(3), {1, 1, 1}, 3).has_value());
}

TEST_CASE("is_bad errors") {
    CHECK_THROWS_AS(is_bad(gen_complete(2)), std::invalid_argument);
    CHECK_THROWS_AS(is_bad(BipartiteMultigraph({{1, 0}, {1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(is_bad(gen_complete(9)), LimitExceeded);
}

TEST_CASE("for q = 3, bad iff pm divisible by 3") {
    for (const auto& [name, g] : testing::regular_corpus(4)) {
        if (regularity(g) != 3) continue;
        CAPTURE(name);
        CHECK(is_bad(g).bad == (pm_mod(g, 3) == 0));
    }
}

TEST_CASE("witnesses are valid and yield the alpha = 1 antifactor") {
    SplitMix64 rng(21);
    int not_bad = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng.below(6);
        const std::size_t q = 3 + rng.below(3);
        const auto g = gen_random_permutation_model(n, q, rng);
        const auto r = is_bad(g);
        if (r.bad) continue;
        ++not_bad;
        const auto& w = *r.witness;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) REQUIRE(w.sub.mult(u, v) <= g.mult(u, v));
        REQUIRE(regularity(w.sub) == 3);
        REQUIRE(pm_mod(w.sub, 3) == w.residue);
        REQUIRE(w.residue != 0);
        const auto h = find_antifactor(w.sub, AlphaAssignment(n, 1), 3);
        REQUIRE(h.has_value());
        // H uses edges of G, and its V-degrees avoid 1 mod 3
        REQUIRE(verify(w.sub, AlphaAssignment(n, 1), *h, 3));
        for (auto d : choice_degrees(g, *h)) REQUIRE(d % 3 != 1);
    }
    CHECK(not_bad > 0);
}
