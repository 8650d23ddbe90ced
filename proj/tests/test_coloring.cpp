#include <doctest.h>

#include <algorithm>

#include "bmg/coloring.hpp"
#include "bmg/gen.hpp"

using namespace bmg;

namespace {

// Hall's condition by checking every subset of U.
bool hall_holds(const BipartiteMultigraph& g) {
    const std::size_t n = g.n_u();
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        std::uint32_t nb = 0;
        for (std::size_t u = 0; u < n; ++u)
            if (s >> u & 1)
                for (std::size_t v = 0; v < n; ++v)
                    if (g.mult(u, v)) nb |= 1u << v;
        if (__builtin_popcount(nb) < __builtin_popcount(s)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("find_perfect_matching examples") {
    CHECK(find_perfect_matching(BipartiteMultigraph({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == Matching{0, 1, 2});
    CHECK(find_perfect_matching(BipartiteMultigraph({{1, 1}, {1, 0}})) == Matching{1, 0});
    CHECK_FALSE(find_perfect_matching(BipartiteMultigraph({{1, 0}, {1, 0}})).has_value());
    CHECK_FALSE(find_perfect_matching(BipartiteMultigraph({{1, 1}})).has_value());
    CHECK(find_perfect_matching(BipartiteMultigraph(0, 0)) == Matching{});
}

TEST_CASE("matching exists iff Hall holds, every support with n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::uint32_t cells = static_cast<std::uint32_t>(n * n);
        for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
            std::vector<std::vector<Multiplicity>> rows(n, std::vector<Multiplicity>(n));
            for (std::uint32_t c = 0; c < cells; ++c) rows[c / n][c % n] = mask >> c & 1;
            const BipartiteMultigraph g(rows);
            const auto m = find_perfect_matching(g);
            REQUIRE(m.has_value() == hall_holds(g));
            if (m) {
                auto seen = *m;
                std::sort(seen.begin(), seen.end());
                REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
                for (std::size_t u = 0; u < n; ++u) REQUIRE(g.mult(u, (*m)[u]) > 0);
            }
        }
    }
}

TEST_CASE("edge_color examples") {
    SUBCASE("triple edge gets three distinct colors") {
        const auto c = edge_color(gen_k2_multi(3), Field(3));
        auto colors = c.colors(0, 0);
        std::sort(colors.begin(), colors.end());
        CHECK(colors == std::vector<std::uint32_t>{0, 1, 2});
    }
    SUBCASE("Latin square coloring of K33 is accepted") {
        const auto g = gen_complete(3);
        EdgeColoring latin(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) latin.colors(i, j) = {static_cast<std::uint32_t>((i + j) % 3)};
        CHECK(check_coloring(g, latin, Field(3)));
        CHECK(check_coloring(g, edge_color(g, Field(3)), Field(3)));
    }
    SUBCASE("doubled C4") {
        const auto g = gen_inflated_cycle(4, 3);
        CHECK(check_coloring(g, edge_color(g, Field(3)), Field(3)));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(edge_color(BipartiteMultigraph({{1, 0}, {1, 1}})), std::invalid_argument);
        CHECK_THROWS_AS(edge_color(gen_complete(3), Field(2)), std::invalid_argument);
    }
}

TEST_CASE("check_coloring rejects clashes") {
    const auto g = gen_k2_multi(3);
    EdgeColoring c(1, 1);
    c.colors(0, 0) = {0, 0, 1};
    CHECK_FALSE(check_coloring(g, c, 3));
    c.colors(0, 0) = {0, 1};
    CHECK_FALSE(check_coloring(g, c, 3));  // wrong number of copies
    c.colors(0, 0) = {0, 1, 3};
    CHECK_FALSE(check_coloring(g, c, 3));  // color out of range
    c.colors(0, 0) = {2, 0, 1};
    CHECK(check_coloring(g, c, 3));
    CHECK_FALSE(check_coloring(g, c, 4));  // proper but not complete
    CHECK(is_proper_coloring(g, c, 4));
}

TEST_CASE("edge_color is proper and complete on random regular multigraphs") {
    SplitMix64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng.below(8), q = 1 + rng.below(5);
        const auto g = gen_random_permutation_model(n, q, rng);
        const auto c = edge_color(g);
        REQUIRE(check_coloring(g, c, static_cast<std::uint32_t>(q)));
        // peeling: removing colors >= t leaves a t-regular graph
        for (std::uint32_t t2 = 0; t2 <= q; ++t2) {
            std::vector<std::vector<Multiplicity>> rows(n, std::vector<Multiplicity>(n, 0));
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v)
                    for (auto col : c.colors(u, v))
                        if (col >= t2) ++rows[u][v];
            const BipartiteMultigraph residual(rows);
            for (std::size_t i = 0; i < n; ++i) {
                REQUIRE(residual.degree_u(i) == static_cast<Multiplicity>(q - t2));
                REQUIRE(residual.degree_v(i) == static_cast<Multiplicity>(q - t2));
            }
        }
    }
}

TEST_CASE("neighbor_with_color") {
    const auto g = gen_inflated_cycle(4, 3);
    const auto c = edge_color(g);
    for (std::size_t u = 0; u < 2; ++u)
        for (std::uint32_t col = 0; col < 3; ++col) {
            const auto v = c.neighbor_with_color(u, col);
            REQUIRE(v.has_value());
            const auto& cs = c.colors(u, *v);
            CHECK(std::find(cs.begin(), cs.end(), col) != cs.end());
        }
    CHECK_FALSE(c.neighbor_with_color(0, 3).has_value());
}
