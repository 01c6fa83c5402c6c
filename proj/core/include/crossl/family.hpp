#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossl/combinatorics.hpp"

namespace crossl {

/// Duplicate-free k-uniform family over [n], members kept in colex order.
class SetFamily {
public:
    SetFamily() : SetFamily(0, 0) {}
    SetFamily(int n, int k);
    /// Sorts and deduplicates; every mask must have popcount k and live in [n].
    SetFamily(int n, int k, std::vector<std::uint64_t> masks);

    static SetFamily from_lists(int n, int k, const std::vector<std::vector<int>>& sets);
    /// All of C([n], k).
    static SetFamily complete(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<std::uint64_t>& masks() const noexcept { return members_; }
    bool contains(std::uint64_t mask) const;
    std::vector<std::vector<int>> to_lists() const;

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int n_;
    int k_;
    std::vector<std::uint64_t> members_;
};

/// Ordered list of families over a common (n, k).
class FamilyTuple {
public:
    explicit FamilyTuple(std::vector<SetFamily> families);

    int n() const noexcept { return families_.front().n(); }
    int k() const noexcept { return families_.front().k(); }
    std::size_t r() const noexcept { return families_.size(); }
    const SetFamily& operator[](std::size_t i) const { return families_.at(i); }
    const std::vector<SetFamily>& families() const noexcept { return families_; }
    std::size_t total_size() const noexcept;
    bool all_nonempty() const noexcept;

    friend bool operator==(const FamilyTuple&, const FamilyTuple&) = default;

private:
    std::vector<SetFamily> families_;
};

int intersection_size(const KSubset& a, const KSubset& b);

bool is_cross_L(const SetFamily& a, const SetFamily& b, const LSpec& L);
bool is_pairwise_cross_L(const FamilyTuple& t, const LSpec& L);
/// Every choice of one member per family meets in a size from L.
bool is_rcross_L(const FamilyTuple& t, const LSpec& L);
/// Distinct members only.
bool is_L_intersecting(const SetFamily& f, const LSpec& L);

/// All i-subsets of members.
SetFamily shadow(const SetFamily& f, int i);

/// `size` distinct k-sets drawn uniformly with a seeded generator.
SetFamily random_family(int n, int k, std::size_t size, std::uint64_t seed);

/// Lovász form of the Kruskal-Katona bound for one family and order i.
struct ShadowCheck {
    std::size_t size = 0;
    double x = 0;                // C(x, k) = |F|
    std::size_t shadow_size = 0;
    double lower_bound = 0;      // C(x, i)
    bool satisfied = false;      // |∂_i F| >= C(x, i) within tolerance
    double shadow_x = 0;         // C(y, i) = |∂_i F|
    double family_bound = 0;     // C(y, k); |F| may not exceed it
    bool converse_satisfied = false;
};
ShadowCheck check_shadow_bound(const SetFamily& f, int i, double tolerance = 1e-6);

/// Members containing S.
SetFamily restrict_to(const SetFamily& f, std::uint64_t S);
/// {F \ S : F contains S}, a (k - |S|)-uniform family on [n] \ S.
SetFamily strip(const SetFamily& f, std::uint64_t S);

/// s-sets S with |F(S)| > (3/2) C(n-s, k-s) - C(n-k, k-s), compared exactly.
SetFamily threshold_S(const SetFamily& f, int s);
/// s-sets T with |F(T)| >= C(n-s, k-s) - C(n-k, k-s).
SetFamily threshold_T(const SetFamily& f, int s);

/// C([n], k) minus f.
SetFamily complement_family(const SetFamily& f);
/// {[n] \ A : A in f}; uniformity becomes n - k.
SetFamily complement_sets(const SetFamily& f);

enum class Cross2Variant { StarPair, ComplementSplit, StarStar, Subcube, PairMiddle, ComplementClosed, Complete };

std::string to_string(Cross2Variant v);
Cross2Variant parse_cross2_variant(const std::string& name);

/// Side conditions a named extremal pair needs at (n, k, L).
bool cross2_variant_applies(int n, int k, const LSpec& L, Cross2Variant v);

/// Builds the named extremal pair. `seed` is required for the two
/// complement-based variants and ignored otherwise.
std::pair<SetFamily, SetFamily> construct_cross2_extremal(int n, int k, const LSpec& L, Cross2Variant v,
                                                          const std::optional<SetFamily>& seed = std::nullopt);

/// r-1 copies of {[k]} and the sets meeting [k] in a size from L.
FamilyTuple construct_pairwise_extremal(int n, int k, int r, const LSpec& L);

/// {[k]}, {A : |A ∩ [k]| <= s-1, [l] ⊆ A}, then r-2 full l-stars; r-cross [l, s-1]-intersecting.
FamilyTuple construct_rcross_extremal(int n, int k, int r, int l, int s);

/// {F : |F ∩ [k]| in L}.
SetFamily sets_meeting_prefix_in(int n, int k, const LSpec& L);

}  // namespace crossl
