#include "naive.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace naive {

std::vector<std::uint64_t> ksets(int n, int k) {
    std::vector<std::uint64_t> out;
    if (k < 0 || k > n) return out;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::uint64_t m = 0;
        for (int e = 0; e < n; ++e)
            if (pick[static_cast<std::size_t>(e)]) m |= std::uint64_t{1} << e;
        out.push_back(m);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

namespace {

using Word = std::uint64_t;

std::vector<Word> compatibility(const std::vector<std::uint64_t>& sets, const crossl::LSpec& L) {
    std::vector<Word> compat(sets.size(), 0);
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = 0; b < sets.size(); ++b)
            if (L.contains(std::popcount(sets[a] & sets[b]))) compat[a] |= Word{1} << b;
    return compat;
}

Word all_of(std::size_t m) { return m == 64 ? ~Word{0} : (Word{1} << m) - 1; }

// region[s] = sets compatible with every member of s, filled in by lowest bit.
std::vector<Word> regions(const std::vector<Word>& compat) {
    const std::size_t m = compat.size();
    std::vector<Word> region(std::size_t{1} << m);
    region[0] = all_of(m);
    for (std::size_t s = 1; s < region.size(); ++s)
        region[s] = region[s & (s - 1)] & compat[static_cast<std::size_t>(std::countr_zero(s))];
    return region;
}

void keep_max(std::optional<std::size_t>& best, std::size_t v) {
    if (!best || v > *best) best = v;
}

}  // namespace

std::optional<std::size_t> cross2_max(int n, int k, const crossl::LSpec& L) {
    const auto sets = ksets(n, k);
    if (sets.size() > 22) throw std::invalid_argument("naive cross2 scan limited to 22 sets");
    const auto region = regions(compatibility(sets, L));
    std::optional<std::size_t> best;
    for (std::size_t a = 1; a < region.size(); ++a)
        if (region[a]) keep_max(best, static_cast<std::size_t>(std::popcount(a) + std::popcount(region[a])));
    return best;
}

std::optional<std::size_t> pairwise_max(int n, int k, int r, const crossl::LSpec& L) {
    const auto sets = ksets(n, k);
    if (sets.size() > 12 || r < 2 || r > 3) throw std::invalid_argument("naive pairwise scan out of range");
    const auto region = regions(compatibility(sets, L));
    const std::size_t top = region.size();
    std::optional<std::size_t> best;
    for (std::size_t a = 1; a < top; ++a) {
        if (r == 2) {
            if (region[a]) keep_max(best, static_cast<std::size_t>(std::popcount(a) + std::popcount(region[a])));
            continue;
        }
        for (std::size_t b = 1; b < top; ++b) {
            if ((b & region[a]) != b) continue;  // b must be compatible with a
            const Word last = region[a] & region[b];
            if (last)
                keep_max(best, static_cast<std::size_t>(std::popcount(a) + std::popcount(b) + std::popcount(last)));
        }
    }
    return best;
}

std::optional<std::size_t> rcross_max(int n, int k, int r, const crossl::LSpec& L) {
    const auto sets = ksets(n, k);
    const std::size_t m = sets.size();
    if (m > 12 || r < 2 || r > 3) throw std::invalid_argument("naive r-cross scan out of range");
    const std::size_t top = std::size_t{1} << m;
    std::optional<std::size_t> best;
    if (r == 2) return cross2_max(n, k, L);
    // triple[a][b] = sets c with |a ∩ b ∩ c| in L
    std::vector<Word> triple(m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                if (L.contains(std::popcount(sets[a] & sets[b] & sets[c]))) triple[a * m + b] |= Word{1} << c;
    for (std::size_t A = 1; A < top; ++A)
        for (std::size_t B = 1; B < top; ++B) {
            Word last = all_of(m);
            for (Word x = A; x && last; x &= x - 1)
                for (Word y = B; y && last; y &= y - 1)
                    last &= triple[static_cast<std::size_t>(std::countr_zero(x)) * m +
                                   static_cast<std::size_t>(std::countr_zero(y))];
            if (last)
                keep_max(best, static_cast<std::size_t>(std::popcount(A) + std::popcount(B) + std::popcount(last)));
        }
    return best;
}

namespace {

void grow_clique(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& candidates, std::size_t size,
                 std::size_t& best) {
    if (candidates.empty()) {
        best = std::max(best, size);
        return;
    }
    if (size + candidates.size() <= best) return;
    while (!candidates.empty()) {
        if (size + candidates.size() <= best) return;
        const std::size_t v = candidates.back();
        candidates.pop_back();
        std::vector<std::size_t> next;
        for (std::size_t u : candidates)
            if (adj[v][u]) next.push_back(u);
        grow_clique(adj, next, size + 1, best);
    }
}

}  // namespace

std::size_t max_t_intersecting(int n, int k, int t) {
    const auto sets = ksets(n, k);
    std::vector<std::vector<bool>> adj(sets.size(), std::vector<bool>(sets.size(), false));
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = 0; b < sets.size(); ++b)
            adj[a][b] = a != b && std::popcount(sets[a] & sets[b]) >= t;
    std::vector<std::size_t> all(sets.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::size_t best = 0;
    grow_clique(adj, all, 0, best);
    return best;
}

}  // namespace naive
