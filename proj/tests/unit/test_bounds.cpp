#include <doctest.h>

#include "crossl/bounds.hpp"
#include "crossl/family.hpp"
#include "naive.hpp"

using namespace crossl;

namespace {

LSpec L2(const char* text) { return LSpec::parse(text, 2); }

}  // namespace

TEST_CASE("classify_regime") {
    CHECK(classify_regime(6, 2, L2("1,2")).tag == Regime::CaseII);
    CHECK(classify_regime(4, 2, L2("1")).tag == Regime::CaseIII);
    CHECK(classify_regime(3, 2, L2("0")).tag == Regime::Infeasible);
    CHECK(classify_regime(4, 2, L2("all")).tag == Regime::CaseI);
    CHECK(classify_regime(5, 3, LSpec::parse("1..3", 3)).tag == Regime::CaseI);
    CHECK(classify_regime(5, 3, LSpec::parse("1,3", 3)).tag == Regime::CaseII);
}

TEST_CASE("bound_cross2 values") {
    CHECK(*bound_cross2(6, 2, L2("1,2")).value == 10);
    CHECK(*bound_cross2(4, 2, L2("1")).value == 6);
    CHECK(*bound_cross2(4, 2, L2("0..2")).value == 12);
    CHECK(bound_cross2(3, 2, L2("0")).infeasible());
    CHECK(bound_cross2(6, 2, L2("1,2")).regime == "CASE_II");
}

TEST_CASE("bound_cross2 extremal classes") {
    using V = std::vector<std::string>;
    CHECK(bound_cross2(6, 2, L2("1,2")).extremal_classes == V{"STAR_PAIR", "STAR_STAR"});
    CHECK(bound_cross2(6, 4, LSpec::parse("3,4", 4)).extremal_classes == V{"STAR_PAIR", "SUBCUBE"});
    CHECK(bound_cross2(4, 2, L2("1")).extremal_classes == V{"PAIR_MIDDLE", "COMPLEMENT_CLOSED"});
    CHECK(bound_cross2(5, 2, L2("0,1")).extremal_classes == V{"STAR_PAIR", "COMPLEMENT_SPLIT"});
}

TEST_CASE("term consistency and Vandermonde") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 12; ++n) {
            CHECK(meeting_sum(n, k, LSpec::full(k)) == binom_exact(n, k));
            for (const LSpec& L : all_lspecs(k)) {
                const BoundResult b = bound_cross2(n, k, L);
                if (b.infeasible()) continue;
                BigCount sum = 0;
                for (const auto& [i, addend] : b.terms)
                    if (L.contains(i)) sum += addend;
                if (b.regime == "CASE_II") CHECK(*b.value == sum + 1);
                if (b.regime == "CASE_III") CHECK(*b.value == sum + 2);
                if (b.regime == "CASE_I") CHECK(*b.value == 2 * binom_exact(n, k));
            }
        }
}

TEST_CASE("meeting_sum is monotone in L") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 10; ++n)
            for (const LSpec& a : all_lspecs(k))
                for (const LSpec& b : all_lspecs(k))
                    if (a.subset_of(b)) CHECK(meeting_sum(n, k, a) <= meeting_sum(n, k, b));
}

TEST_CASE("reflection symmetry of the catalog at n = 2k") {
    for (int k = 2; k <= 4; ++k)
        for (const LSpec& L : all_lspecs(k)) {
            const BoundResult a = bound_cross2(2 * k, k, L);
            const BoundResult b = bound_cross2(2 * k, k, L.reflect());
            CHECK(a.value == b.value);
        }
}

TEST_CASE("bound_ekr") {
    CHECK(bound_ekr(6, 2) == 5);
    CHECK(bound_ekr(6, 3) == 10);
    CHECK(bound_ekr(4, 2) == 3);
    CHECK_THROWS_AS(bound_ekr(5, 3), ParameterError);
}

TEST_CASE("product bound") {
    const ProductBound a = bound_deza_erdos_frankl(10, 3, LSpec::parse("1", 3));
    CHECK(a.value == BigRational(9, 2));
    CHECK(a.floor == 4);
    CHECK(bound_deza_erdos_frankl(10, 3, LSpec::parse("0,1", 3)).value == 15);
    CHECK_THROWS_AS(bound_deza_erdos_frankl(10, 3, LSpec::parse("1,3", 3)), ParameterError);
}

TEST_CASE("two-uniformity bound") {
    CHECK(bound_wang_zhang(6, 2, 3, 1).value == 17);
    CHECK(bound_wang_zhang(7, 2, 3, 1).value == 26);
    CHECK(bound_wang_zhang(6, 2, 2, 1).value == 10);
    CHECK_FALSE(bound_wang_zhang(3, 2, 2, 1).warnings.empty());
}

TEST_CASE("pairwise cross-intersecting bound") {
    const BranchedCount a = bound_pairwise_cross_intersecting(6, 2, 3);
    CHECK(a.value == 15);
    CHECK(a.winner == "STAR");
    const BranchedCount b = bound_pairwise_cross_intersecting(9, 2, 2);
    CHECK(b.value == 16);
    CHECK(b.winner == "TIE");
    const BranchedCount c = bound_pairwise_cross_intersecting(20, 3, 2);
    CHECK(c.value == 461);
    CHECK(c.winner == "HM");
    CHECK_THROWS_AS(bound_pairwise_cross_intersecting(5, 3, 2), ParameterError);
}

TEST_CASE("pairwise t-intersecting bound") {
    CHECK(bound_pairwise_t(7, 3, 1, 2).value == 32);
    CHECK(bound_pairwise_t(6, 2, 1, 2).value == 10);
    CHECK(bound_pairwise_t(5, 2, 1, 3).value == 12);
    CHECK_THROWS_AS(bound_pairwise_t(4, 3, 1, 2), ParameterError);
}

TEST_CASE("max_t_intersecting agrees with a maximum clique search") {
    for (int k = 2; k <= 3; ++k)
        for (int t = 1; t < k; ++t)
            for (int n = k; n <= 8; ++n) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(t);
                CHECK(max_t_intersecting(n, k, t) == naive::max_t_intersecting(n, k, t));
            }
    CHECK(max_t_intersecting(7, 3, 1) == 15);
    CHECK(max_t_intersecting(5, 2, 1) == 4);
}

TEST_CASE("bound_pairwise_L dispatch") {
    CHECK(*bound_pairwise_L(6, 2, 3, L2("0,2")).value == 9);
    CHECK(bound_pairwise_L(6, 2, 3, L2("0,2")).regime == "PAIRWISE_IV");
    CHECK(*bound_pairwise_L(6, 2, 3, L2("all")).value == 45);
    CHECK_FALSE(bound_pairwise_L(6, 2, 3, L2("all")).asymptotic);
    CHECK(bound_pairwise_L(6, 2, 3, L2("0,1")).value == binom_exact(6, 2));
    CHECK_THROWS_AS(bound_pairwise_L(6, 2, 3, L2("0")), UnsupportedL);
    CHECK_THROWS_AS(bound_pairwise_L(6, 3, 3, LSpec::parse("1", 3)), UnsupportedL);
}

TEST_CASE("bound_rcross_t") {
    const ArgmaxCount a = bound_rcross_t(6, 2, 1, 2);
    CHECK(a.value == 10);
    CHECK(a.argmax == 1);
    // (8,3,1,2): m = 1, 2, 3 give 21+21, 36+6, 46+1
    const ArgmaxCount b = bound_rcross_t(8, 3, 1, 2);
    CHECK(b.value == 47);
    CHECK(b.argmax == 3);
    // (7,3,1,2): 15+15, 25+5, 31+1
    CHECK(bound_rcross_t(7, 3, 1, 2).value == 32);
    for (int n = 4; n <= 9; ++n)
        for (int r = 2; r <= 4; ++r) CHECK(bound_rcross_t(n, 2, 2, r).value == r);
}

TEST_CASE("bound_rcross_interval") {
    CHECK(bound_rcross_interval(5, 2, 2, 0, 1) == 4);
    CHECK(bound_rcross_interval(6, 2, 3, 1, 2) == 10);
    for (int k = 2; k <= 4; ++k)
        for (int n = 2 * k; n <= 12; ++n)
            for (int r = 2; r <= 4; ++r) CHECK(bound_rcross_interval(n, k, r, k - 1, k) == (r - 1) * (n - k + 1));
    CHECK_THROWS_AS(bound_rcross_interval(6, 2, 2, 1, 1), ParameterError);
}

TEST_CASE("unsupported r-cross L") {
    CHECK_THROWS_AS(bound_rcross_L(6, 2, 3, L2("0,2")), UnsupportedL);
    CHECK(bound_rcross_L(5, 2, 2, L2("0")).asymptotic);
    CHECK(*bound_rcross_L(5, 2, 2, L2("0")).value == 4);
}

TEST_CASE("constructions attain the catalog") {
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 10; ++n)
            for (const LSpec& L : all_lspecs(k)) {
                const BoundResult b = bound_cross2(n, k, L);
                for (const auto& name : b.extremal_classes) {
                    const Cross2Variant v = parse_cross2_variant(name);
                    if (v == Cross2Variant::ComplementSplit || v == Cross2Variant::ComplementClosed) continue;
                    const auto pair = construct_cross2_extremal(n, k, L, v);
                    CAPTURE(n);
                    CAPTURE(k);
                    CAPTURE(name);
                    CHECK(is_cross_L(pair.first, pair.second, L));
                    CHECK(BigCount(pair.first.size() + pair.second.size()) == *b.value);
                }
                if (L.contains(k) && !L.is_upper_interval() && n >= 2 * k)
                    for (int r = 2; r <= 4; ++r) {
                        const FamilyTuple t = construct_pairwise_extremal(n, k, r, L);
                        CHECK(is_pairwise_cross_L(t, L));
                        CHECK(BigCount(t.total_size()) == *bound_pairwise_L(n, k, r, L).value);
                    }
            }
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= 10; ++n)
            for (int r = 2; r <= 4; ++r)
                for (int l = 0; l < k; ++l)
                    for (int s = l + 1; s <= k; ++s) {
                        const FamilyTuple t = construct_rcross_extremal(n, k, r, l, s);
                        CHECK(BigCount(t.total_size()) == bound_rcross_interval(n, k, r, l, s));
                        if (r <= 3 && n <= 8) CHECK(is_rcross_L(t, LSpec::interval(l, s - 1, k)));
                    }
}
