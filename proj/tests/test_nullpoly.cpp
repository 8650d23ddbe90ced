#include <doctest.h>

#include "bmg/coloring.hpp"
#include "bmg/counting.hpp"
#include "bmg/gen.hpp"
#include "bmg/nullpoly.hpp"
#include "corpus.hpp"

using namespace bmg;

namespace {

std::shared_ptr<const Field> gf(std::uint64_t q) { return std::make_shared<const Field>(q); }

// f(s) straight from the product formula, without expanding anything.
FieldElement eval_product(const BipartiteMultigraph& g, const EdgeColoring& c, const AlphaAssignment& alpha,
                          const Field& f, const ColorAssignment& s) {
    FieldElement prod = f.one();
    for (std::size_t v = 0; v < g.n_v(); ++v) {
        FieldElement sum = f.neg(f.from_int(alpha[v]));
        for (std::size_t u = 0; u < g.n_u(); ++u)
            for (auto col : c.colors(u, v)) sum = f.add(sum, f.g_eval(f.element(col), s[u]));
        prod = f.mul(prod, sum);
    }
    return prod;
}

bool next_point(ColorAssignment& s, std::uint32_t q) {
    for (std::size_t i = s.size(); i-- > 0;) {
        if (++s[i].value < q) return true;
        s[i].value = 0;
    }
    return false;
}

}  // namespace

TEST_CASE("ring operations") {
    const auto f3 = gf(3);
    const auto x = SparsePoly::variable(f3, 1, 0);
    const auto one = SparsePoly::constant(f3, 1, f3->one());
    const auto two = SparsePoly::constant(f3, 1, f3->element(2));
    const auto p = (x + one) * (x + two);
    SparsePoly expected = x * x + two;
    CHECK(p == expected);
    CHECK(p.terms().size() == 2);
    CHECK(p.eval({f3->element(2)}) == f3->zero());
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).terms().empty());
    CHECK(p.total_degree() == 2);
    CHECK(SparsePoly(f3, 2).total_degree() == -1);
    CHECK(p.scale(f3->element(2)) == p + p);
    CHECK(x.pow(3) == x * x * x);
    CHECK_THROWS_AS(x + SparsePoly::variable(f3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(x + SparsePoly::variable(gf(5), 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(p.eval({}), std::invalid_argument);
    CHECK_THROWS_AS(SparsePoly::variable(f3, 1, 1), std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
    const auto f4 = gf(4);
    SplitMix64 rng(3);
    auto random_poly = [&] {
        SparsePoly p(f4, 2);
        for (int k = 0; k < 4; ++k)
            p = p + SparsePoly::constant(f4, 2, f4->element(rng.below(4))) *
                        SparsePoly::variable(f4, 2, rng.below(2)).pow(static_cast<std::uint32_t>(rng.below(4)));
        return p;
    };
    for (int t = 0; t < 50; ++t) {
        const auto a = random_poly(), b = random_poly();
        ColorAssignment s{f4->element(rng.below(4)), f4->element(rng.below(4))};
        CHECK((a * b).eval(s) == f4->mul(a.eval(s), b.eval(s)));
        CHECK((a + b).eval(s) == f4->add(a.eval(s), b.eval(s)));
    }
}

TEST_CASE("indicator polynomial") {
    for (std::uint64_t q : {2, 3, 4}) {
        const auto f = gf(q);
        for (std::uint32_t i = 0; i < q; ++i) {
            const auto g = indicator_poly(f, 1, 0, {i});
            CHECK(g.total_degree() == static_cast<long>(q - 1));
            CHECK(g.coefficient({static_cast<std::uint32_t>(q - 1)}) == f->neg(f->one()));
            for (std::uint32_t x = 0; x < q; ++x) CHECK(g.eval({{x}}) == f->g_eval({i}, {x}));
        }
    }
}

TEST_CASE("build_f examples") {
    const auto f3 = gf(3);
    const auto k2 = gen_k2_multi(3);
    const auto c = edge_color(k2, *f3);
    SUBCASE("triple edge, alpha = 1: indicators sum to 1, f is zero") {
        const auto f = build_f(k2, c, {1}, f3);
        CHECK(f.is_zero());
        CHECK(top_coefficient(f) == f3->zero());
    }
    SUBCASE("triple edge, alpha = 0: f is the constant 1") {
        const auto f = build_f(k2, c, {0}, f3);
        CHECK(f == SparsePoly::constant(f3, 1, f3->one()));
        CHECK(f.total_degree() == 0);
    }
    SUBCASE("single edge over GF(2)") {
        const auto f2 = gf(2);
        const BipartiteMultigraph g({{1}});
        for (std::uint32_t col = 0; col < 2; ++col) {
            EdgeColoring single(1, 1);
            single.colors(0, 0) = {col};
            const auto f = build_f(g, single, {0}, f2);
            const auto x = SparsePoly::variable(f2, 1, 0);
            const auto one = SparsePoly::constant(f2, 1, f2->one());
            CHECK(f == one - (x - SparsePoly::constant(f2, 1, {col})));
            CHECK(top_coefficient(f) == f2->one());  // -1 = (-1)^1 pm(G) mod 2
        }
    }
    SUBCASE("doubled C4, alpha = 1: top coefficient (-1)^2 * 5 = 2") {
        const auto g = gen_inflated_cycle(4, 3);
        const auto f = build_f(g, edge_color(g, *f3), {1, 1}, f3);
        CHECK(top_coefficient(f) == f3->element(2));
        CHECK(f.total_degree() <= 4);
        CHECK(nonvanishing_witness(f).has_value());
    }
    SUBCASE("guards and preconditions") {
        CHECK_THROWS_AS(build_f(gen_complete(5), edge_color(gen_complete(5)), AlphaAssignment(5, 0), gf(5)), LimitExceeded);
        const auto g7 = gen_random_permutation_model(7, 2, 1);
        CHECK_THROWS_AS(build_f(g7, edge_color(g7), AlphaAssignment(7, 0), gf(2)), LimitExceeded);
        CHECK_THROWS_AS(build_f(k2, c, {}, f3), std::invalid_argument);
        CHECK_THROWS_AS(build_f(k2, c, {3}, f3), std::invalid_argument);
        EdgeColoring clash(1, 1);
        clash.colors(0, 0) = {0, 0, 1};
        CHECK_THROWS_AS(build_f(k2, clash, {0}, f3), std::invalid_argument);
    }
}

TEST_CASE("nonvanishing_witness") {
    const auto f3 = gf(3);
    const auto w = nonvanishing_witness(SparsePoly::constant(f3, 3, f3->one()));
    REQUIRE(w.has_value());
    CHECK(*w == ColorAssignment(3, f3->zero()));
    CHECK_FALSE(nonvanishing_witness(SparsePoly(f3, 3)).has_value());
    // x^3 - x vanishes on all of GF(3) yet is a nonzero polynomial
    const auto x = SparsePoly::variable(f3, 1, 0);
    CHECK_FALSE(nonvanishing_witness(x.pow(3) - x).has_value());
    CHECK_THROWS_AS(nonvanishing_witness(SparsePoly::constant(f3, 7, f3->one())), LimitExceeded);
    const auto first = nonvanishing_witness(SparsePoly::variable(f3, 2, 1));
    CHECK(*first == ColorAssignment{f3->zero(), f3->one()});
}

TEST_CASE("coefficient identity, evaluation agreement and Corollary 2 on the corpus") {
    for (const auto& [name, g] : testing::regular_corpus(3)) {
        const auto q = static_cast<std::uint32_t>(*regularity(g));
        if (q > 3) continue;
        CAPTURE(name);
        const auto field = gf(q);
        const auto c = edge_color(g, *field);
        AlphaAssignment alpha(g.n_v(), 0);
        do {
            const auto f = build_f(g, c, alpha, field);
            FieldElement expected = field->from_int(static_cast<std::int64_t>(pm_mod(g, q)));
            if (g.n_v() % 2) expected = field->neg(expected);
            REQUIRE(top_coefficient(f) == expected);
            REQUIRE(f.total_degree() <= static_cast<long>((q - 1) * g.n_u()));
            bool any_nonzero = false;
            ColorAssignment s(g.n_u(), field->zero());
            do {
                const auto value = f.eval(s);
                REQUIRE(value == eval_product(g, c, alpha, *field, s));
                // nonzero iff the selected edges meet every constraint
                std::vector<std::size_t> deg(g.n_v(), 0);
                for (std::size_t u = 0; u < g.n_u(); ++u) ++deg[*c.neighbor_with_color(u, s[u].value)];
                bool ok = true;
                for (std::size_t v = 0; v < g.n_v(); ++v) ok = ok && deg[v] % q != alpha[v];
                REQUIRE((value != field->zero()) == ok);
                any_nonzero = any_nonzero || ok;
            } while (next_point(s, q));
            REQUIRE(nonvanishing_witness(f).has_value() == any_nonzero);
            if (top_coefficient(f) != field->zero()) REQUIRE(any_nonzero);
        } while ([&] {
            for (std::size_t v = alpha.size(); v-- > 0;) {
                if (++alpha[v] < q) return true;
                alpha[v] = 0;
            }
            return false;
        }());
    }
}
