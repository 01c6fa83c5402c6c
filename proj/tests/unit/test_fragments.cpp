#include <doctest.h>

#include "crossl/bounds.hpp"
#include "crossl/fragments.hpp"
#include "naive.hpp"

using namespace crossl;

namespace {

SetFamily fam(int n, int k, const std::vector<std::vector<int>>& sets) { return SetFamily::from_lists(n, k, sets); }

}  // namespace

TEST_CASE("graph construction") {
    const IntersectionGraph g(4, 2, LSpec::parse("1", 2));
    CHECK(g.side_size() == 6);
    CHECK(g.degree() == 2);
    for (std::size_t v = 0; v < 6; ++v) CHECK(g.neighbors(v).count() == 2);
    CHECK(IntersectionGraph(4, 2, LSpec::full(2)).edge_count() == 0);
    CHECK(IntersectionGraph(5, 2, LSpec::parse("2", 2)).degree() == 9);
}

TEST_CASE("degree matches the closed form") {
    for (int k = 2; k <= 3; ++k)
        for (int n = k; n <= 8; ++n)
            for (const LSpec& L : all_lspecs(k)) {
                const IntersectionGraph g(n, k, L);
                CHECK(BigCount(g.degree()) == expected_degree(n, k, L));
                for (std::size_t v = 0; v < g.side_size(); ++v) CHECK(g.neighbors(v).count() == g.degree());
            }
}

TEST_CASE("alpha examples") {
    const auto a = alpha_nontrivial(IntersectionGraph(4, 2, LSpec::parse("1", 2)));
    REQUIRE(a);
    CHECK(a->value == 6);
    CHECK(a->a.size() + a->b.size() == 6);
    CHECK(is_cross_L(a->a, a->b, LSpec::parse("1", 2)));
    CHECK(alpha_nontrivial(IntersectionGraph(6, 2, LSpec::parse("1,2", 2)))->value == 10);
    CHECK_FALSE(alpha_nontrivial(IntersectionGraph(3, 2, LSpec::parse("0", 2))));
}

TEST_CASE("alpha with and without symmetry and threads") {
    for (int k = 2; k <= 3; ++k)
        for (int n = k; n <= 7; ++n)
            for (const LSpec& L : all_lspecs(k)) {
                const IntersectionGraph g(n, k, L);
                const auto plain = alpha_nontrivial(g, {false, 1});
                const auto fast = alpha_nontrivial(g, {true, 3});
                REQUIRE(plain.has_value() == fast.has_value());
                if (!plain) continue;
                CHECK(plain->value == fast->value);
                CHECK(is_cross_L(fast->a, fast->b, L));
                CHECK(fast->a.size() + fast->b.size() == fast->value);
            }
}

TEST_CASE("epsilon") {
    CHECK(epsilon(IntersectionGraph(4, 2, LSpec::parse("1", 2)), Side::X) == 0);
    CHECK(epsilon(IntersectionGraph(6, 2, LSpec::parse("1,2", 2)), Side::X) == 5);
    CHECK(epsilon(IntersectionGraph(4, 2, LSpec::full(2)), Side::X) == -6);
    CHECK_THROWS_AS(epsilon(IntersectionGraph(3, 2, LSpec::parse("0", 2)), Side::X), ParameterError);
}

TEST_CASE("is_fragment") {
    const IntersectionGraph g(4, 2, LSpec::parse("1", 2));
    CHECK(is_fragment(g, fam(4, 2, {{1, 2}, {3, 4}}), Side::X));
    CHECK_FALSE(is_fragment(g, fam(4, 2, {{1, 2}}), Side::X));
    CHECK_FALSE(is_fragment(g, SetFamily::complete(4, 2), Side::X));
    CHECK_THROWS_AS(is_fragment(g, SetFamily(4, 2), Side::X), ParameterError);
}

TEST_CASE("fragment census examples") {
    const IntersectionGraph g(4, 2, LSpec::parse("1", 2));
    FragmentOptions capped;
    capped.size_cap = 2;
    const FragmentCensus two = enumerate_fragments(g, Side::X, capped);
    REQUIRE(two.fragments.size() == 3);
    for (const auto& f : two.fragments) {
        CHECK(f.vertices.size() == 2);
        CHECK(f.primitivity == Primitivity::Imprimitive);
        CHECK(complement_sets(f.vertices) == f.vertices);
    }
    capped.size_cap = 1;
    CHECK(enumerate_fragments(g, Side::X, capped).fragments.empty());

    const IntersectionGraph h(6, 2, LSpec::parse("1,2", 2));
    const FragmentCensus singles = enumerate_fragments(h, Side::X, capped);
    CHECK(singles.fragments.size() == 15);
}

TEST_CASE("phi") {
    const IntersectionGraph g(4, 2, LSpec::parse("1", 2));
    FragmentRecord pair;
    pair.vertices = fam(4, 2, {{1, 2}, {3, 4}});
    pair.side = Side::X;
    const FragmentRecord image = phi(g, pair);
    CHECK(image.side == Side::Y);
    CHECK(image.vertices.to_lists() == std::vector<std::vector<int>>{{1, 3}, {2, 3}, {1, 4}, {2, 4}});
    CHECK(phi(g, image).vertices == pair.vertices);

    const IntersectionGraph h(6, 2, LSpec::parse("1,2", 2));
    FragmentRecord single;
    single.vertices = fam(6, 2, {{1, 2}});
    CHECK(phi(h, single).vertices.size() == 9);

    FragmentRecord bad;
    bad.vertices = fam(4, 2, {{1, 2}});
    CHECK_THROWS_AS(phi(g, bad), ParameterError);
}

TEST_CASE("primitivity") {
    const GroupAction s4 = GroupAction::symmetric(4);
    CHECK(is_imprimitive_set(fam(4, 2, {{1, 2}, {3, 4}}), s4) == true);
    CHECK(is_imprimitive_set(fam(4, 2, {{1, 2}, {1, 3}}), s4) == false);
    CHECK(is_semi_imprimitive(fam(4, 2, {{1, 2}, {1, 3}}), s4) == true);
    CHECK(classify_primitivity(fam(4, 2, {{1, 2}, {1, 3}}), s4) == Primitivity::SemiImprimitive);
    CHECK_THROWS_AS(is_imprimitive_set(fam(4, 2, {{1, 2}}), s4), ParameterError);
    CHECK(family_orbit(fam(4, 2, {{1, 2}, {3, 4}}), s4)->size() == 3);
}

TEST_CASE("full census invariants") {
    for (int n = 4; n <= 6; ++n)
        for (const LSpec& L : all_lspecs(2)) {
            const IntersectionGraph g(n, 2, L);
            if (g.is_complete() || !alpha_nontrivial(g)) continue;
            for (Side side : {Side::X, Side::Y}) {
                const FragmentCensus census = enumerate_fragments(g, side, {});
                REQUIRE(census.complete);
                for (const auto& f : census.fragments) {
                    CHECK(f.vertices.size() + f.phi_image.size() == census.alpha);
                    CHECK(f.deficiency == census.epsilon);
                    CHECK(phi(g, phi(g, f)).vertices == f.vertices);
                    CHECK(f.balanced == (f.vertices.size() == f.phi_image.size()));
                }
                CHECK(check_fragment_closure(g, census).empty());
            }
        }
}

TEST_CASE("only complementary pairs are imprimitive at n = 2k") {
    const IntersectionGraph g(4, 2, LSpec::parse("1", 2));
    const FragmentCensus census = enumerate_fragments(g, Side::X, {});
    for (const auto& f : census.fragments)
        if (f.primitivity == Primitivity::Imprimitive) {
            CHECK(f.vertices.size() == 2);
            CHECK(complement_sets(f.vertices) == f.vertices);
        }
    for (const LSpec& L : all_lspecs(3)) {
        const IntersectionGraph h(6, 3, L);
        if (h.is_complete() || !alpha_nontrivial(h)) continue;
        FragmentOptions opts;
        opts.size_cap = 3;
        opts.node_budget = 2'000'000;
        const FragmentCensus c = enumerate_fragments(h, Side::X, opts);
        for (const auto& f : c.fragments)
            if (f.primitivity == Primitivity::Imprimitive) {
                CHECK(f.vertices.size() == 2);
                CHECK(complement_sets(f.vertices) == f.vertices);
            }
    }
}

TEST_CASE("theorem checks on examples") {
    const TheoremReport a = verify_theorem_23(IntersectionGraph(4, 2, LSpec::parse("1", 2)));
    CHECK(a.verdict == Verdict::Pass);
    CHECK(a.alpha == 6);
    const TheoremReport b = verify_theorem_21(IntersectionGraph(6, 2, LSpec::parse("1,2", 2)));
    CHECK(b.verdict == Verdict::Pass);
    CHECK(b.alpha == 10);
    CHECK(verify_theorem_21(IntersectionGraph(4, 2, LSpec::full(2))).verdict == Verdict::Vacuous);
    CHECK(verify_theorem_23(IntersectionGraph(4, 2, LSpec::full(2))).verdict == Verdict::Vacuous);
}

TEST_CASE("alpha agrees with the catalog on feasible regimes") {
    for (int k = 2; k <= 3; ++k)
        for (int n = k; n <= 8; ++n)
            for (const LSpec& L : all_lspecs(k)) {
                const auto a = alpha_nontrivial(IntersectionGraph(n, k, L));
                const BoundResult b = bound_cross2(n, k, L);
                REQUIRE(a.has_value() == !b.infeasible());
                if (a) CHECK(BigCount(a->value) == *b.value);
            }
}

TEST_CASE("alpha agrees with the naive subset scan") {
    for (int k = 2; k <= 3; ++k)
        for (int n = k; n <= 6; ++n) {
            if (binom_exact(n, k) > 20) continue;
            for (const LSpec& L : all_lspecs(k)) {
                const auto a = alpha_nontrivial(IntersectionGraph(n, k, L));
                const auto s = naive::cross2_max(n, k, L);
                REQUIRE(a.has_value() == s.has_value());
                if (a) CHECK(a->value == *s);
            }
        }
}
