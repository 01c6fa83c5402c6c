#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "crossl/combinatorics.hpp"
#include "crossl/family.hpp"
#include "crossl/symmetry.hpp"

namespace crossl {

using Bits = boost::dynamic_bitset<std::uint64_t>;

enum class Side { X, Y };
std::string to_string(Side s);

/// Bipartite conflict graph G(X, Y): both sides are C([n], k) in colex
/// order, and A ~ B exactly when |A ∩ B| is not in L.
class IntersectionGraph {
public:
    /// Refuses graphs with more than `max_side` vertices per side.
    IntersectionGraph(int n, int k, const LSpec& L, std::size_t max_side = 1u << 14);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    const LSpec& L() const noexcept { return L_; }
    std::size_t side_size() const noexcept { return vertices_.size(); }
    const std::vector<std::uint64_t>& vertices() const noexcept { return vertices_; }

    /// Neighbours on the opposite side; identical for X and Y.
    const Bits& neighbors(std::size_t v) const { return adjacency_[v]; }
    bool adjacent(std::size_t x, std::size_t y) const { return adjacency_[x].test(y); }
    /// Common degree d(X) = d(Y).
    std::size_t degree() const noexcept { return degree_; }
    std::size_t edge_count() const noexcept { return degree_ * vertices_.size(); }
    bool is_complete() const noexcept { return degree_ == vertices_.size(); }

    std::size_t index_of(std::uint64_t mask) const;
    Bits neighborhood(const Bits& a) const;
    Bits to_bits(const SetFamily& f) const;
    SetFamily to_family(const Bits& b) const;

private:
    int n_;
    int k_;
    LSpec L_;
    std::vector<std::uint64_t> vertices_;
    std::vector<Bits> adjacency_;
    std::size_t degree_ = 0;
};

/// Closed-form common degree: sum over i not in L of C(k,i) C(n-k,k-i).
BigCount expected_degree(int n, int k, const LSpec& L);

struct AlphaResult {
    std::size_t value = 0;
    SetFamily a;
    SetFamily b;
};

struct AlphaOptions {
    /// Fix the X vertex to [k]; S_n is transitive on X and acts on both sides at once.
    bool use_symmetry = true;
    unsigned threads = 1;
};

/// Largest |A| + |B| over independent sets with A ⊆ X and B ⊆ Y both
/// nonempty. For each nonadjacent pair (x, y) the remainder after deleting
/// N(x) and N(y) is solved by König duality. Empty when no such pair exists.
std::optional<AlphaResult> alpha_nontrivial(const IntersectionGraph& g, const AlphaOptions& opts = {});

/// Size of a maximum matching between the given vertex subsets.
std::size_t max_matching(const IntersectionGraph& g, const Bits& left, const Bits& right);

/// min |N(A)| - |A| over nonempty A on `side` with N(A) not the whole other side.
long long epsilon(const IntersectionGraph& g, Side side);

bool is_fragment(const IntersectionGraph& g, const SetFamily& a, Side side);

enum class Primitivity { Primitive, Imprimitive, SemiImprimitive, Unknown };
std::string to_string(Primitivity p);

/// A permutation group on [n] given by generators, acting on k-sets by relabeling.
struct GroupAction {
    int degree = 0;
    std::vector<Permutation> generators;

    /// Generated by (1 2) and (1 2 ... n).
    static GroupAction symmetric(int n);
};

/// Orbit of a family under the action, by breadth-first closure. Empty when
/// the orbit exceeds `budget` images.
std::optional<std::vector<SetFamily>> family_orbit(const SetFamily& b, const GroupAction& action,
                                                   std::size_t budget = 1'000'000);

/// 1 < |B| < C(n,k) and every image meets B in nothing or all of B.
std::optional<bool> is_imprimitive_set(const SetFamily& b, const GroupAction& action, std::size_t budget = 1'000'000);
/// As above but an intersection of size one is also allowed.
std::optional<bool> is_semi_imprimitive(const SetFamily& b, const GroupAction& action,
                                        std::size_t budget = 1'000'000);
Primitivity classify_primitivity(const SetFamily& b, const GroupAction& action, std::size_t budget = 1'000'000);

struct FragmentRecord {
    Side side = Side::X;
    SetFamily vertices;
    long long deficiency = 0;
    SetFamily phi_image;
    bool balanced = false;
    Primitivity primitivity = Primitivity::Unknown;
};

struct FragmentCensus {
    std::size_t alpha = 0;
    long long epsilon = 0;
    std::size_t degree = 0;
    std::vector<FragmentRecord> fragments;
    /// Every subset up to the cap was examined.
    bool complete = true;
    std::size_t size_cap = 0;
};

struct FragmentOptions {
    std::size_t size_cap = 0;  // 0 means the whole side
    std::size_t node_budget = 50'000'000;
    std::size_t orbit_budget = 1'000'000;
};

/// All fragments on `side` with at most `size_cap` vertices. Only orbit
/// representatives are extended; each found representative is expanded to
/// its full orbit. Throws on complete bipartite graphs.
FragmentCensus enumerate_fragments(const IntersectionGraph& g, Side side, const FragmentOptions& opts);

/// φ(A) = (other side) \ N(A). Throws when `f` is not a fragment.
FragmentRecord phi(const IntersectionGraph& g, const FragmentRecord& f);

enum class Verdict { Pass, Fail, Unknown, Vacuous };
std::string to_string(Verdict v);

struct TheoremReport {
    Verdict verdict = Verdict::Unknown;
    std::size_t alpha = 0;
    std::size_t degree = 0;
    std::size_t side_size = 0;
    std::size_t fragment_count = 0;
    std::size_t imprimitive_count = 0;
    std::string detail;
};

/// If every fragment is primitive then alpha = |Y| - d(X) + 1.
TheoremReport verify_theorem_21(const IntersectionGraph& g, const FragmentOptions& opts = {});
/// If alpha > |Y| - d(X) + 1 then X holds an imprimitive fragment.
TheoremReport verify_theorem_23(const IntersectionGraph& g, const FragmentOptions& opts = {});

/// Closure of fragments under γ-union and γ-intersection whenever
/// |A| <= |φ(A)| and γ(A) meets A properly. Returns the violations.
std::vector<std::string> check_fragment_closure(const IntersectionGraph& g, const FragmentCensus& census);

}  // namespace crossl
