#include <doctest.h>

#include <random>

#include "crossl/bounds.hpp"
#include "crossl/family.hpp"

using namespace crossl;

namespace {

SetFamily fam(int n, int k, const std::vector<std::vector<int>>& sets) { return SetFamily::from_lists(n, k, sets); }

KSubset ks(std::vector<int> e, int n) { return KSubset::from_elements(e, n); }

}  // namespace

TEST_CASE("SetFamily normalizes members") {
    const SetFamily f = fam(4, 2, {{3, 4}, {1, 2}, {1, 2}});
    CHECK(f.size() == 2);
    CHECK(f.to_lists() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(fam(4, 2, {{1, 2, 3}}), ParameterError);
    CHECK_THROWS_AS(fam(4, 2, {{1, 5}}), ParameterError);
}

TEST_CASE("intersection_size") {
    CHECK(intersection_size(ks({1, 2}, 4), ks({2, 3}, 4)) == 1);
    CHECK(intersection_size(ks({1, 2}, 4), ks({1, 2}, 4)) == 2);
    CHECK(intersection_size(ks({1, 2}, 4), ks({3, 4}, 4)) == 0);
    CHECK_THROWS_AS(intersection_size(ks({1, 2}, 4), ks({1, 2}, 5)), ParameterError);
}

TEST_CASE("is_cross_L") {
    CHECK(is_cross_L(fam(4, 2, {{1, 2}}), fam(4, 2, {{1, 3}}), LSpec::parse("1", 2)));
    CHECK_FALSE(is_cross_L(fam(4, 2, {{1, 2}}), fam(4, 2, {{1, 3}}), LSpec::parse("0", 2)));
    CHECK(is_cross_L(fam(4, 2, {{1, 2}}), fam(4, 2, {{1, 2}}), LSpec::parse("2", 2)));
}

TEST_CASE("is_pairwise_cross_L") {
    const LSpec two = LSpec::parse("2", 2);
    CHECK(is_pairwise_cross_L(FamilyTuple({fam(4, 2, {{1, 2}}), fam(4, 2, {{1, 2}}), fam(4, 2, {{1, 2}})}), two));
    CHECK_FALSE(is_pairwise_cross_L(FamilyTuple({fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}}), fam(4, 2, {{1, 3}})}),
                                    LSpec::parse("0,2", 2)));
    CHECK(is_pairwise_cross_L(FamilyTuple({fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})}), LSpec::parse("0", 2)));
    CHECK_THROWS_AS(is_pairwise_cross_L(FamilyTuple({fam(4, 2, {{1, 2}})}), two), ParameterError);
}

TEST_CASE("is_rcross_L") {
    CHECK(is_rcross_L(FamilyTuple({fam(4, 2, {{1, 2}}), fam(4, 2, {{1, 3}}), fam(4, 2, {{1, 4}})}),
                      LSpec::parse("1", 2)));
    CHECK_FALSE(is_rcross_L(FamilyTuple({fam(5, 3, {{1, 2, 3}}), fam(5, 3, {{1, 2, 4}}), fam(5, 3, {{3, 4, 5}})}),
                            LSpec::parse("1", 3)));
    CHECK_THROWS_AS(is_rcross_L(FamilyTuple({fam(4, 2, {{1, 2}})}), LSpec::parse("1", 2)), ParameterError);
}

TEST_CASE("the three predicates coincide at r = 2") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= std::min(3, n); ++k) {
            const auto all = all_ksubsets(n, k);
            for (int trial = 0; trial < 60; ++trial) {
                std::vector<std::uint64_t> a, b;
                for (std::uint64_t m : all) {
                    if (rng() % 3 == 0) a.push_back(m);
                    if (rng() % 3 == 0) b.push_back(m);
                }
                const SetFamily A(n, k, a), B(n, k, b);
                for (const LSpec& L : all_lspecs(k)) {
                    const FamilyTuple t({A, B});
                    const bool cross = is_cross_L(A, B, L);
                    CHECK(is_pairwise_cross_L(t, L) == cross);
                    CHECK(is_rcross_L(t, L) == cross);
                }
            }
        }
}

TEST_CASE("is_L_intersecting") {
    CHECK(is_L_intersecting(fam(4, 2, {{1, 2}, {1, 3}, {1, 4}}), LSpec::parse("1", 2)));
    CHECK_FALSE(is_L_intersecting(fam(4, 2, {{1, 2}, {3, 4}}), LSpec::parse("1", 2)));
    CHECK(is_L_intersecting(fam(4, 2, {{1, 2}}), LSpec::parse("0", 2)));
}

TEST_CASE("shadow") {
    CHECK(shadow(fam(4, 3, {{1, 2, 3}}), 2).to_lists() == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(shadow(SetFamily::complete(4, 2), 1).to_lists() == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
    const SetFamily f = fam(6, 3, {{1, 2, 3}, {2, 4, 6}});
    CHECK(shadow(f, 3) == f);
    CHECK_THROWS_AS(shadow(f, 4), ParameterError);
}

TEST_CASE("shadow composes") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SetFamily f = random_family(8, 4, 1 + seed % 20, seed);
        for (int j = 0; j <= 4; ++j)
            for (int i = 0; i <= j; ++i) CHECK(shadow(shadow(f, j), i) == shadow(f, i));
    }
}

TEST_CASE("restrict_to and strip") {
    const SetFamily f = fam(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(restrict_to(f, 0b1).to_lists() == std::vector<std::vector<int>>{{1, 2}, {1, 3}});
    CHECK(strip(f, 0b1).to_lists() == std::vector<std::vector<int>>{{2}, {3}});
    CHECK(restrict_to(f, 0) == f);
}

TEST_CASE("threshold_S") {
    const SetFamily star = restrict_to(SetFamily::complete(6, 2), 0b1);
    CHECK(threshold_S(star, 1).to_lists() == std::vector<std::vector<int>>{{1}});
    CHECK(threshold_S(SetFamily(6, 2), 1).empty());
    for (int n = 4; n <= 9; ++n)
        for (int k = 2; k <= 3 && 2 * k <= n; ++k) {
            // every singleton has degree C(n-1,k-1); compare 2*deg with 3*C(n-1,k-1) - 2*C(n-k,k-1)
            const bool all = 2 * binom_exact(n - 1, k - 1) > 3 * binom_exact(n - 1, k - 1) - 2 * binom_exact(n - k, k - 1);
            CHECK(threshold_S(SetFamily::complete(n, k), 1).size() == (all ? static_cast<std::size_t>(n) : 0U));
        }
}

TEST_CASE("threshold_T") {
    const SetFamily star = restrict_to(SetFamily::complete(6, 2), 0b1);
    CHECK(threshold_T(star, 1).size() == 6);
    CHECK(threshold_T(SetFamily(6, 2), 1).empty());
    CHECK(threshold_T(fam(6, 2, {{1, 2}}), 1).to_lists() == std::vector<std::vector<int>>{{1}, {2}});
}

TEST_CASE("complements") {
    CHECK(complement_family(SetFamily(5, 2)) == SetFamily::complete(5, 2));
    CHECK(complement_sets(fam(4, 2, {{1, 2}})).to_lists() == std::vector<std::vector<int>>{{3, 4}});
    const SetFamily f = fam(7, 3, {{1, 2, 3}, {2, 5, 7}});
    CHECK(complement_sets(complement_sets(f)) == f);
    CHECK(complement_sets(f).k() == 4);
}

TEST_CASE("cross2 constructions") {
    const auto sp = construct_cross2_extremal(5, 2, LSpec::parse("0,2", 2), Cross2Variant::StarPair);
    CHECK(sp.first.to_lists() == std::vector<std::vector<int>>{{1, 2}});
    CHECK(sp.second.to_lists() == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {3, 5}, {4, 5}});

    const auto pm = construct_cross2_extremal(4, 2, LSpec::parse("1", 2), Cross2Variant::PairMiddle);
    CHECK(pm.first.to_lists() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK(pm.second.size() == 4);

    const auto sc = construct_cross2_extremal(6, 4, LSpec::parse("3,4", 4), Cross2Variant::Subcube);
    CHECK(sc.first == SetFamily(6, 4, all_ksubsets(5, 4)));
    CHECK(sc.second == sc.first);

    const auto ss = construct_cross2_extremal(6, 2, LSpec::parse("1,2", 2), Cross2Variant::StarStar);
    CHECK(ss.first.size() == 5);
    CHECK(ss.first == ss.second);

    CHECK_THROWS_AS(construct_cross2_extremal(6, 3, LSpec::parse("1,2", 3), Cross2Variant::StarStar), ParameterError);
    CHECK_THROWS_AS(construct_cross2_extremal(5, 3, LSpec::parse("1,2", 3), Cross2Variant::ComplementSplit),
                    ParameterError);
}

TEST_CASE("pairwise construction") {
    const FamilyTuple t = construct_pairwise_extremal(6, 2, 3, LSpec::parse("0,2", 2));
    CHECK(t[0].size() == 1);
    CHECK(t[1].size() == 1);
    CHECK(t[2].size() == 7);
    CHECK(t.total_size() == 9);
    CHECK(is_pairwise_cross_L(t, LSpec::parse("0,2", 2)));
    CHECK(construct_pairwise_extremal(5, 2, 2, LSpec::parse("2", 2)).total_size() == 2);
    CHECK_THROWS_AS(construct_pairwise_extremal(5, 2, 2, LSpec::parse("0,1", 2)), ParameterError);
}

TEST_CASE("r-cross construction") {
    const FamilyTuple a = construct_rcross_extremal(5, 2, 2, 0, 1);
    CHECK(a[0].to_lists() == std::vector<std::vector<int>>{{1, 2}});
    CHECK(a[1].to_lists() == std::vector<std::vector<int>>{{3, 4}, {3, 5}, {4, 5}});
    CHECK(a.total_size() == 4);
    const FamilyTuple b = construct_rcross_extremal(6, 2, 3, 1, 2);
    CHECK(b[0].size() == 1);
    CHECK(b[1].size() == 4);
    CHECK(b[2].size() == 5);
    CHECK(b.total_size() == 10);
    CHECK(is_rcross_L(b, LSpec::interval(1, 1, 2)));
    CHECK_THROWS_AS(construct_rcross_extremal(6, 2, 3, 2, 2), ParameterError);
}

TEST_CASE("random_family is reproducible") {
    CHECK(random_family(9, 3, 17, 5) == random_family(9, 3, 17, 5));
    CHECK(random_family(9, 3, 17, 5).size() == 17);
    CHECK_THROWS_AS(random_family(4, 2, 7, 0), ParameterError);
}
