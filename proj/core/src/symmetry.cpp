#include "crossl/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "crossl/combinatorics.hpp"

namespace crossl {

std::uint64_t permute_mask(const Permutation& p, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) out |= std::uint64_t{1} << p[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

RankPermutations::RankPermutations(int n, int k) : n_(n), k_(k) {
    if (n > kMaxTabulatedDegree) throw ParameterError("symmetry tables need n <= 8");
    const auto sets = all_ksubsets(n, k);
    if (sets.size() > 64) throw ParameterError("symmetry tables need C(n, k) <= 64");
    vertices_ = sets.size();
    const auto perms = all_permutations(n);
    maps_.resize(perms.size() * vertices_);
    std::size_t at = 0;
    for (const auto& p : perms)
        for (std::uint64_t m : sets) maps_[at++] = static_cast<std::uint8_t>(colex_rank(permute_mask(p, m)));
}

VertexSet RankPermutations::apply(std::size_t p, VertexSet s) const noexcept {
    const std::uint8_t* map = &maps_[p * vertices_];
    VertexSet out = 0;
    for (VertexSet m = s; m; m &= m - 1) out |= VertexSet{1} << map[std::countr_zero(m)];
    return out;
}

bool RankPermutations::is_canonical(VertexSet s) const noexcept {
    const std::size_t order = group_order();
    for (std::size_t p = 1; p < order; ++p)
        if (vertex_set_less(apply(p, s), s)) return false;
    return true;
}

VertexSet RankPermutations::canonical(VertexSet s) const noexcept {
    VertexSet best = s;
    const std::size_t order = group_order();
    for (std::size_t p = 1; p < order; ++p) {
        const VertexSet img = apply(p, s);
        if (vertex_set_less(img, best)) best = img;
    }
    return best;
}

std::vector<VertexSet> RankPermutations::orbit(VertexSet s) const {
    std::set<VertexSet> seen;
    const std::size_t order = group_order();
    for (std::size_t p = 0; p < order; ++p) seen.insert(apply(p, s));
    return {seen.begin(), seen.end()};
}

}  // namespace crossl
