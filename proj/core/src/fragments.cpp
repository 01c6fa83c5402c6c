#include "crossl/fragments.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <thread>

namespace crossl {

std::string to_string(Side s) { return s == Side::X ? "X" : "Y"; }

std::string to_string(Primitivity p) {
    switch (p) {
        case Primitivity::Primitive: return "PRIMITIVE";
        case Primitivity::Imprimitive: return "IMPRIMITIVE";
        case Primitivity::SemiImprimitive: return "SEMI_IMPRIMITIVE";
        case Primitivity::Unknown: return "UNKNOWN";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Unknown: return "UNKNOWN";
        case Verdict::Vacuous: return "VACUOUS";
    }
    return "?";
}

IntersectionGraph::IntersectionGraph(int n, int k, const LSpec& L, std::size_t max_side) : n_(n), k_(k), L_(L) {
    if (k < 2 || n < k) throw ParameterError("need n >= k >= 2");
    if (n > kMaxGround) throw ParameterError("ground set size must not exceed 63");
    if (L.k() != k) throw ParameterError("L is defined for a different uniformity");
    if (binom_exact(n, k) > max_side) throw ParameterError("conflict graph too large for this build");
    vertices_ = all_ksubsets(n, k);
    const std::size_t size = vertices_.size();
    adjacency_.assign(size, Bits(size));
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            if (!L.contains(std::popcount(vertices_[x] & vertices_[y]))) adjacency_[x].set(y);
    degree_ = size ? adjacency_[0].count() : 0;
}

std::size_t IntersectionGraph::index_of(std::uint64_t mask) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), mask);
    if (it == vertices_.end() || *it != mask) throw ParameterError("set is not a vertex of this graph");
    return static_cast<std::size_t>(it - vertices_.begin());
}

Bits IntersectionGraph::neighborhood(const Bits& a) const {
    Bits out(side_size());
    for (auto v = a.find_first(); v != Bits::npos; v = a.find_next(v)) out |= adjacency_[v];
    return out;
}

Bits IntersectionGraph::to_bits(const SetFamily& f) const {
    if (f.n() != n_ || f.k() != k_) throw ParameterError("family does not live on this graph");
    Bits out(side_size());
    for (std::uint64_t m : f.masks()) out.set(index_of(m));
    return out;
}

SetFamily IntersectionGraph::to_family(const Bits& b) const {
    std::vector<std::uint64_t> masks;
    for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v)) masks.push_back(vertices_[v]);
    return SetFamily(n_, k_, std::move(masks));
}

BigCount expected_degree(int n, int k, const LSpec& L) {
    BigCount sum = 0;
    for (int i = 0; i <= k; ++i)
        if (!L.contains(i)) sum += binom_exact(k, i) * binom_exact(n - k, k - i);
    return sum;
}

namespace {

// Kuhn's augmenting paths. match_right[y] is the matched left vertex or npos.
bool augment(const IntersectionGraph& g, std::size_t u, const Bits& right, Bits& visited,
             std::vector<std::size_t>& match_right) {
    Bits options = g.neighbors(u) & right;
    options -= visited;
    for (auto y = options.find_first(); y != Bits::npos; y = options.find_next(y)) {
        if (visited.test(y)) continue;
        visited.set(y);
        if (match_right[y] == Bits::npos || augment(g, match_right[y], right, visited, match_right)) {
            match_right[y] = u;
            return true;
        }
    }
    return false;
}

struct MatchingState {
    std::size_t size = 0;
    std::vector<std::size_t> match_right;
};

MatchingState run_matching(const IntersectionGraph& g, const Bits& left, const Bits& right) {
    MatchingState state;
    state.match_right.assign(g.side_size(), Bits::npos);
    Bits visited(g.side_size());
    for (auto u = left.find_first(); u != Bits::npos; u = left.find_next(u)) {
        visited.reset();
        if (augment(g, u, right, visited, state.match_right)) ++state.size;
    }
    return state;
}

// Maximum independent set of the bipartite graph induced on (left, right),
// via a minimum vertex cover read off the alternating-path closure.
std::pair<Bits, Bits> max_independent(const IntersectionGraph& g, const Bits& left, const Bits& right) {
    const std::size_t size = g.side_size();
    MatchingState state = run_matching(g, left, right);
    std::vector<std::size_t> match_left(size, Bits::npos);
    for (std::size_t y = 0; y < size; ++y)
        if (state.match_right[y] != Bits::npos) match_left[state.match_right[y]] = y;

    Bits reach_left(size);
    Bits reach_right(size);
    std::deque<std::size_t> queue;
    for (auto u = left.find_first(); u != Bits::npos; u = left.find_next(u))
        if (match_left[u] == Bits::npos) {
            reach_left.set(u);
            queue.push_back(u);
        }
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        Bits next = g.neighbors(u) & right;
        next -= reach_right;
        for (auto y = next.find_first(); y != Bits::npos; y = next.find_next(y)) {
            reach_right.set(y);
            const std::size_t partner = state.match_right[y];
            if (partner != Bits::npos && !reach_left.test(partner)) {
                reach_left.set(partner);
                queue.push_back(partner);
            }
        }
    }
    Bits a = left & reach_left;
    Bits b = right - reach_right;
    return {a, b};
}

std::size_t remainder_value(const IntersectionGraph& g, std::size_t x, std::size_t y) {
    const Bits left = ~g.neighbors(y);
    const Bits right = ~g.neighbors(x);
    return left.count() + right.count() - run_matching(g, left, right).size;
}

}  // namespace

std::size_t max_matching(const IntersectionGraph& g, const Bits& left, const Bits& right) {
    return run_matching(g, left, right).size;
}

std::optional<AlphaResult> alpha_nontrivial(const IntersectionGraph& g, const AlphaOptions& opts) {
    const std::size_t size = g.side_size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t x_limit = opts.use_symmetry ? std::min<std::size_t>(1, size) : size;
    for (std::size_t x = 0; x < x_limit; ++x)
        for (std::size_t y = 0; y < size; ++y)
            if (!g.adjacent(x, y)) pairs.emplace_back(x, y);
    if (pairs.empty()) return std::nullopt;

    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(pairs.size())));
    // Per-worker best (value, pair index); merged by larger value then smaller index.
    std::vector<std::pair<std::size_t, std::size_t>> best(workers, {0, pairs.size()});
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < pairs.size(); i += workers) {
            const std::size_t value = remainder_value(g, pairs[i].first, pairs[i].second);
            if (value > best[w].first || (value == best[w].first && i < best[w].second)) best[w] = {value, i};
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    auto winner = best.front();
    for (const auto& b : best)
        if (b.first > winner.first || (b.first == winner.first && b.second < winner.second)) winner = b;

    const auto [x, y] = pairs[winner.second];
    auto [a, b] = max_independent(g, ~g.neighbors(y), ~g.neighbors(x));
    AlphaResult out;
    out.value = winner.first;
    out.a = g.to_family(a);
    out.b = g.to_family(b);
    return out;
}

long long epsilon(const IntersectionGraph& g, Side /*side*/) {
    const auto alpha = alpha_nontrivial(g);
    if (!alpha) throw ParameterError("epsilon is undefined on a complete bipartite graph");
    // Both sides have C(n,k) vertices, so epsilon(X) = |Y| - alpha = epsilon(Y).
    return static_cast<long long>(g.side_size()) - static_cast<long long>(alpha->value);
}

bool is_fragment(const IntersectionGraph& g, const SetFamily& a, Side side) {
    if (a.empty()) throw ParameterError("fragments are nonempty");
    const Bits bits = g.to_bits(a);
    const Bits nb = g.neighborhood(bits);
    if (nb.all()) return false;
    const long long deficiency = static_cast<long long>(nb.count()) - static_cast<long long>(bits.count());
    return deficiency == epsilon(g, side);
}

GroupAction GroupAction::symmetric(int n) {
    GroupAction out;
    out.degree = n;
    if (n < 2) return out;
    Permutation swap(static_cast<std::size_t>(n));
    Permutation cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        swap[static_cast<std::size_t>(i)] = i;
        cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    out.generators = {swap, cycle};
    return out;
}

namespace {

SetFamily apply_to_family(const Permutation& p, const SetFamily& f) {
    std::vector<std::uint64_t> masks;
    masks.reserve(f.size());
    for (std::uint64_t m : f.masks()) masks.push_back(permute_mask(p, m));
    return SetFamily(f.n(), f.k(), std::move(masks));
}

std::size_t common_count(const SetFamily& a, const SetFamily& b) {
    std::size_t count = 0;
    for (std::uint64_t m : a.masks())
        if (b.contains(m)) ++count;
    return count;
}

std::optional<std::vector<std::size_t>> image_overlaps(const SetFamily& b, const GroupAction& action,
                                                       std::size_t budget) {
    if (action.degree != b.n()) throw ParameterError("group degree differs from the ground set size");
    const std::size_t total = all_ksubsets(b.n(), b.k()).size();
    if (b.size() <= 1 || b.size() >= total) throw ParameterError("primitivity tests need 1 < |B| < C(n,k)");
    const auto orbit = family_orbit(b, action, budget);
    if (!orbit) return std::nullopt;
    std::vector<std::size_t> overlaps;
    for (const auto& image : *orbit) overlaps.push_back(common_count(image, b));
    return overlaps;
}

}  // namespace

std::optional<std::vector<SetFamily>> family_orbit(const SetFamily& b, const GroupAction& action, std::size_t budget) {
    std::set<std::vector<std::uint64_t>> seen{b.masks()};
    std::vector<SetFamily> out{b};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& gen : action.generators) {
            SetFamily image = apply_to_family(gen, out[head]);
            if (seen.insert(image.masks()).second) {
                if (out.size() >= budget) return std::nullopt;
                out.push_back(std::move(image));
            }
        }
    }
    return out;
}

std::optional<bool> is_imprimitive_set(const SetFamily& b, const GroupAction& action, std::size_t budget) {
    const auto overlaps = image_overlaps(b, action, budget);
    if (!overlaps) return std::nullopt;
    return std::all_of(overlaps->begin(), overlaps->end(), [&](std::size_t c) { return c == 0 || c == b.size(); });
}

std::optional<bool> is_semi_imprimitive(const SetFamily& b, const GroupAction& action, std::size_t budget) {
    const auto overlaps = image_overlaps(b, action, budget);
    if (!overlaps) return std::nullopt;
    return std::all_of(overlaps->begin(), overlaps->end(),
                       [&](std::size_t c) { return c == 0 || c == 1 || c == b.size(); });
}

Primitivity classify_primitivity(const SetFamily& b, const GroupAction& action, std::size_t budget) {
    const std::size_t total = all_ksubsets(b.n(), b.k()).size();
    if (b.size() <= 1 || b.size() >= total) return Primitivity::Primitive;
    const auto overlaps = image_overlaps(b, action, budget);
    if (!overlaps) return Primitivity::Unknown;
    bool imprimitive = true;
    bool semi = true;
    for (std::size_t c : *overlaps) {
        if (c != 0 && c != b.size()) imprimitive = false;
        if (c != 0 && c != 1 && c != b.size()) semi = false;
    }
    if (imprimitive) return Primitivity::Imprimitive;
    return semi ? Primitivity::SemiImprimitive : Primitivity::Primitive;
}

namespace {

std::vector<VertexSet> word_adjacency(const IntersectionGraph& g) {
    if (g.side_size() > 64) throw ParameterError("fragment enumeration needs C(n, k) <= 64");
    std::vector<VertexSet> out(g.side_size(), 0);
    for (std::size_t v = 0; v < g.side_size(); ++v)
        for (std::size_t u = 0; u < g.side_size(); ++u)
            if (g.adjacent(v, u)) out[v] |= VertexSet{1} << u;
    return out;
}

VertexSet word_neighborhood(const std::vector<VertexSet>& adj, VertexSet s) {
    VertexSet out = 0;
    for (VertexSet m = s; m; m &= m - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
}

SetFamily family_of(const IntersectionGraph& g, VertexSet s) {
    std::vector<std::uint64_t> masks;
    for (VertexSet m = s; m; m &= m - 1) masks.push_back(g.vertices()[static_cast<std::size_t>(std::countr_zero(m))]);
    return SetFamily(g.n(), g.k(), std::move(masks));
}

VertexSet word_of(const IntersectionGraph& g, const SetFamily& f) {
    VertexSet out = 0;
    for (std::uint64_t m : f.masks()) out |= VertexSet{1} << g.index_of(m);
    return out;
}

struct FragmentSearch {
    const std::vector<VertexSet>& adj;
    const RankPermutations* group;
    VertexSet full;
    long long eps;
    std::size_t cap;
    std::size_t budget;
    std::size_t side;
    std::size_t nodes = 0;
    bool truncated = false;
    std::vector<VertexSet> reps;

    bool fragment(VertexSet s) const {
        const VertexSet nb = word_neighborhood(adj, s);
        return nb != full && static_cast<long long>(std::popcount(nb)) - std::popcount(s) == eps;
    }

    void extend(VertexSet s, std::size_t next) {
        if (truncated) return;
        if (static_cast<std::size_t>(std::popcount(s)) >= cap) return;
        for (std::size_t v = next; v < side; ++v) {
            const VertexSet child = s | (VertexSet{1} << v);
            if (++nodes > budget) {
                truncated = true;
                return;
            }
            if (group && !group->is_canonical(child)) continue;
            if (fragment(child)) reps.push_back(child);
            extend(child, v + 1);
        }
    }
};

}  // namespace

FragmentCensus enumerate_fragments(const IntersectionGraph& g, Side side, const FragmentOptions& opts) {
    const auto alpha = alpha_nontrivial(g);
    if (!alpha) throw ParameterError("fragments are undefined on a complete bipartite graph");
    const auto adj = word_adjacency(g);
    const std::size_t size = g.side_size();

    FragmentCensus census;
    census.alpha = alpha->value;
    census.epsilon = static_cast<long long>(size) - static_cast<long long>(alpha->value);
    census.degree = g.degree();
    census.size_cap = opts.size_cap == 0 ? size : std::min(opts.size_cap, size);

    std::optional<RankPermutations> group;
    if (g.n() <= kMaxTabulatedDegree) group.emplace(g.n(), g.k());

    FragmentSearch search{adj, group ? &*group : nullptr, size == 64 ? ~VertexSet{0} : (VertexSet{1} << size) - 1,
                          census.epsilon, census.size_cap, opts.node_budget, size, 0, false, {}};
    search.extend(0, 0);
    census.complete = !search.truncated;

    const GroupAction action = GroupAction::symmetric(g.n());
    std::map<VertexSet, Primitivity> found;  // keyed in colex-of-vertices order
    for (VertexSet rep : search.reps) {
        const Primitivity kind = classify_primitivity(family_of(g, rep), action, opts.orbit_budget);
        const std::vector<VertexSet> members = group ? group->orbit(rep) : std::vector<VertexSet>{rep};
        for (VertexSet m : members) found.emplace(m, kind);
    }

    std::vector<std::pair<VertexSet, Primitivity>> ordered(found.begin(), found.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int sa = std::popcount(a.first);
        const int sb = std::popcount(b.first);
        return sa != sb ? sa < sb : vertex_set_less(a.first, b.first);
    });
    for (const auto& [set, kind] : ordered) {
        FragmentRecord rec;
        rec.side = side;
        rec.vertices = family_of(g, set);
        rec.deficiency = census.epsilon;
        rec.phi_image = family_of(g, search.full & ~word_neighborhood(adj, set));
        rec.balanced = rec.vertices.size() == rec.phi_image.size();
        rec.primitivity = kind;
        census.fragments.push_back(std::move(rec));
    }
    return census;
}

FragmentRecord phi(const IntersectionGraph& g, const FragmentRecord& f) {
    if (!is_fragment(g, f.vertices, f.side)) throw ParameterError("phi is defined on fragments only");
    const Bits nb = g.neighborhood(g.to_bits(f.vertices));
    FragmentRecord out;
    out.side = f.side == Side::X ? Side::Y : Side::X;
    out.vertices = g.to_family(~nb);
    out.deficiency = f.deficiency;
    out.phi_image = f.vertices;
    out.balanced = out.vertices.size() == out.phi_image.size();
    out.primitivity = g.n() <= kMaxTabulatedDegree || out.vertices.size() <= 1
                          ? classify_primitivity(out.vertices, GroupAction::symmetric(g.n()))
                          : Primitivity::Unknown;
    return out;
}

namespace {

TheoremReport census_report(const IntersectionGraph& g, const FragmentCensus& c) {
    TheoremReport r;
    r.alpha = c.alpha;
    r.degree = c.degree;
    r.side_size = g.side_size();
    r.fragment_count = c.fragments.size();
    for (const auto& f : c.fragments)
        if (f.side == Side::X && f.primitivity == Primitivity::Imprimitive) ++r.imprimitive_count;
    return r;
}

bool any_unknown(const FragmentCensus& c) {
    return std::any_of(c.fragments.begin(), c.fragments.end(),
                       [](const FragmentRecord& f) { return f.primitivity == Primitivity::Unknown; });
}

}  // namespace

TheoremReport verify_theorem_21(const IntersectionGraph& g, const FragmentOptions& opts) {
    if (g.edge_count() == 0) return {Verdict::Vacuous, 2 * g.side_size(), 0, g.side_size(), 0, 0, "empty graph"};
    if (g.is_complete()) return {Verdict::Vacuous, 0, g.degree(), g.side_size(), 0, 0, "complete bipartite graph"};
    const FragmentCensus c = enumerate_fragments(g, Side::X, opts);
    TheoremReport r = census_report(g, c);
    const std::size_t predicted = g.side_size() - g.degree() + 1;
    if (r.imprimitive_count > 0) {
        r.verdict = Verdict::Vacuous;
        r.detail = "an imprimitive fragment exists, hypothesis fails";
    } else if (!c.complete || c.size_cap < g.side_size() || any_unknown(c)) {
        r.verdict = Verdict::Unknown;
        r.detail = "fragment census incomplete";
    } else {
        r.verdict = r.alpha == predicted ? Verdict::Pass : Verdict::Fail;
        r.detail = "all fragments primitive; alpha = " + std::to_string(r.alpha) +
                   ", |Y| - d(X) + 1 = " + std::to_string(predicted);
    }
    return r;
}

TheoremReport verify_theorem_23(const IntersectionGraph& g, const FragmentOptions& opts) {
    if (g.edge_count() == 0) return {Verdict::Vacuous, 2 * g.side_size(), 0, g.side_size(), 0, 0, "empty graph"};
    if (g.is_complete()) return {Verdict::Vacuous, 0, g.degree(), g.side_size(), 0, 0, "complete bipartite graph"};
    const FragmentCensus c = enumerate_fragments(g, Side::X, opts);
    TheoremReport r = census_report(g, c);
    const std::size_t predicted = g.side_size() - g.degree() + 1;
    if (r.alpha <= predicted) {
        r.verdict = Verdict::Vacuous;
        r.detail = "alpha <= |Y| - d(X) + 1";
    } else if (r.imprimitive_count > 0) {
        r.verdict = Verdict::Pass;
        r.detail = "alpha > |Y| - d(X) + 1 and an imprimitive fragment was found";
    } else if (!c.complete || c.size_cap < g.side_size() || any_unknown(c)) {
        r.verdict = Verdict::Unknown;
        r.detail = "no imprimitive fragment within the searched range";
    } else {
        r.verdict = Verdict::Fail;
        r.detail = "alpha > |Y| - d(X) + 1 but every fragment is primitive";
    }
    return r;
}

std::vector<std::string> check_fragment_closure(const IntersectionGraph& g, const FragmentCensus& census) {
    const auto adj = word_adjacency(g);
    const RankPermutations group(g.n(), g.k());
    const std::size_t size = g.side_size();
    const VertexSet full = size == 64 ? ~VertexSet{0} : (VertexSet{1} << size) - 1;
    auto is_frag = [&](VertexSet s) {
        const VertexSet nb = word_neighborhood(adj, s);
        return s != 0 && nb != full &&
               static_cast<long long>(std::popcount(nb)) - std::popcount(s) == census.epsilon;
    };
    std::vector<std::string> violations;
    for (const auto& f : census.fragments) {
        if (f.side != Side::X || f.vertices.size() > f.phi_image.size()) continue;
        const VertexSet a = word_of(g, f.vertices);
        for (std::size_t p = 0; p < group.group_order(); ++p) {
            const VertexSet image = group.apply(p, a);
            const VertexSet meet = a & image;
            if (meet == 0 || meet == a) continue;
            if (!is_frag(a | image) || !is_frag(meet))
                violations.push_back("closure fails for fragment of size " + std::to_string(f.vertices.size()) +
                                     " under permutation #" + std::to_string(p));
        }
    }
    return violations;
}

}  // namespace crossl
