#pragma once

#include <cstdint>
#include <vector>

namespace crossl {

/// A set of vertices of C([n], k), indexed by colex rank. Needs C(n, k) <= 64.
using VertexSet = std::uint64_t;

/// Largest n for which the full symmetric group is tabulated.
inline constexpr int kMaxTabulatedDegree = 8;

/// Permutation of [n] as images of 0-based points.
using Permutation = std::vector<int>;

std::uint64_t permute_mask(const Permutation& p, std::uint64_t mask);

/// Every permutation of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// The symmetric group on [n] acting on the colex ranks of k-subsets.
class RankPermutations {
public:
    RankPermutations(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    std::size_t vertex_count() const noexcept { return vertices_; }
    std::size_t group_order() const noexcept { return maps_.size() / vertices_; }

    /// Image of vertex v under permutation index p.
    int image(std::size_t p, int v) const noexcept { return maps_[p * vertices_ + static_cast<std::size_t>(v)]; }
    VertexSet apply(std::size_t p, VertexSet s) const noexcept;

    /// True when s is the least image of its orbit, comparing sets by their
    /// sorted vertex sequences. Supports orderly generation: removing the
    /// largest vertex of a canonical set leaves a canonical set.
    bool is_canonical(VertexSet s) const noexcept;
    VertexSet canonical(VertexSet s) const noexcept;
    std::vector<VertexSet> orbit(VertexSet s) const;

private:
    int n_;
    int k_;
    std::size_t vertices_;
    std::vector<std::uint8_t> maps_;
};

/// a < b in the sorted-sequence order: the lowest differing vertex is in a.
inline bool vertex_set_less(VertexSet a, VertexSet b) noexcept {
    const VertexSet diff = a ^ b;
    return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

}  // namespace crossl
