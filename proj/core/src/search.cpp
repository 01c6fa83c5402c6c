#include "crossl/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "crossl/fragments.hpp"
#include "crossl/symmetry.hpp"

namespace crossl {

std::string CanonicalKey::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

std::string to_string(WitnessMatch m) {
    switch (m) {
        case WitnessMatch::Match: return "true";
        case WitnessMatch::Mismatch: return "false";
        case WitnessMatch::Unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Canonical keys

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::string key_header(int n, int k, std::size_t r) {
    std::string out;
    out.push_back(static_cast<char>(n));
    out.push_back(static_cast<char>(k));
    put_u32(out, static_cast<std::uint32_t>(r));
    return out;
}

bool family_less_masks(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

bool family_less_vertices(VertexSet a, VertexSet b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : vertex_set_less(a, b);
}

const RankPermutations* cached_group(int n, int k) {
    static std::mutex lock;
    static std::map<std::pair<int, int>, std::unique_ptr<RankPermutations>> cache;
    if (n > kMaxTabulatedDegree || binom_exact(n, k) > 64) return nullptr;
    std::lock_guard guard(lock);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::make_unique<RankPermutations>(n, k);
    return slot.get();
}

CanonicalKey key_from_vertices(const RankPermutations& group, std::vector<VertexSet> families) {
    std::vector<VertexSet> best;
    std::vector<VertexSet> image(families.size());
    for (std::size_t p = 0; p < group.group_order(); ++p) {
        for (std::size_t i = 0; i < families.size(); ++i) image[i] = group.apply(p, families[i]);
        std::sort(image.begin(), image.end(), family_less_vertices);
        if (best.empty() ||
            std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end(), family_less_vertices))
            best = image;
    }
    CanonicalKey key{key_header(group.n(), group.k(), families.size())};
    for (VertexSet f : best) {
        put_u32(key.bytes, static_cast<std::uint32_t>(std::popcount(f)));
        for (VertexSet m = f; m; m &= m - 1) put_u64(key.bytes, static_cast<std::uint64_t>(std::countr_zero(m)));
    }
    return key;
}

VertexSet vertices_of(const SetFamily& f) {
    VertexSet out = 0;
    for (std::uint64_t m : f.masks()) out |= VertexSet{1} << colex_rank(m);
    return out;
}

SetFamily family_of_vertices(int n, int k, const std::vector<std::uint64_t>& all, VertexSet s) {
    std::vector<std::uint64_t> masks;
    for (VertexSet m = s; m; m &= m - 1) masks.push_back(all[static_cast<std::size_t>(std::countr_zero(m))]);
    return SetFamily(n, k, std::move(masks));
}

CanonicalKey key_of_vertices(int n, int k, const std::vector<VertexSet>& families) {
    if (const RankPermutations* group = cached_group(n, k)) return key_from_vertices(*group, families);
    const auto all = all_ksubsets(n, k);
    std::vector<SetFamily> fams;
    for (VertexSet f : families) fams.push_back(family_of_vertices(n, k, all, f));
    return canonical_form(FamilyTuple(std::move(fams)));
}

}  // namespace

CanonicalKey canonical_form(const FamilyTuple& t) {
    const int n = t.n();
    const int k = t.k();
    if (n > kMaxCanonicalDegree) throw ParameterError("canonical_form needs n <= 10");
    if (const RankPermutations* group = cached_group(n, k)) {
        std::vector<VertexSet> families;
        for (const auto& f : t.families()) families.push_back(vertices_of(f));
        return key_from_vertices(*group, families);
    }
    using Image = std::vector<std::vector<std::uint64_t>>;
    Image best;
    Image image(t.r());
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        for (std::size_t i = 0; i < t.r(); ++i) {
            auto& fam = image[i];
            fam.clear();
            for (std::uint64_t m : t[i].masks()) fam.push_back(permute_mask(p, m));
            std::sort(fam.begin(), fam.end());
        }
        std::sort(image.begin(), image.end(), family_less_masks);
        if (best.empty() ||
            std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end(), family_less_masks))
            best = image;
    } while (std::next_permutation(p.begin(), p.end()));
    CanonicalKey key{key_header(n, k, t.r())};
    for (const auto& fam : best) {
        put_u32(key.bytes, static_cast<std::uint32_t>(fam.size()));
        for (std::uint64_t m : fam) put_u64(key.bytes, colex_rank(m));
    }
    return key;
}

namespace {

// ---------------------------------------------------------------------------
// Witness bookkeeping shared by the oracles

class WitnessPool {
public:
    WitnessPool(int n, int k, std::size_t cap, bool collect) : n_(n), k_(k), cap_(cap), collect_(collect) {}

    /// Current best sum; candidates below it can be pruned.
    std::size_t best() const noexcept { return best_.load(std::memory_order_relaxed); }
    bool collecting() const noexcept { return collect_; }

    void offer(std::size_t total, const std::vector<VertexSet>& families) {
        std::lock_guard guard(lock_);
        const std::size_t current = best_.load();
        if (total < current) return;
        if (total > current || !found_) {
            best_.store(total);
            raw_.clear();
            overflow_ = false;
            found_ = true;
        }
        if (!collect_ && !raw_.empty()) return;
        if (raw_.size() >= cap_) {
            overflow_ = true;
            return;
        }
        raw_.push_back(families);
    }

    bool found() const noexcept { return found_.load(std::memory_order_relaxed); }
    bool overflowed() const noexcept { return overflow_; }

    /// Deduplicate up to isomorphism and sort by key.
    void finish(SearchResult& out) const {
        // Keys are only needed to deduplicate a witness census.
        if (!collect_ || n_ > kMaxCanonicalDegree) {
            for (const auto& w : raw_) out.witnesses.push_back(to_tuple(w));
            return;
        }
        std::map<CanonicalKey, std::vector<VertexSet>> unique;
        for (const auto& w : raw_) unique.emplace(key_of_vertices(n_, k_, w), w);
        for (const auto& [key, w] : unique) {
            out.keys.push_back(key);
            out.witnesses.push_back(to_tuple(w));
        }
    }

private:
    FamilyTuple to_tuple(const std::vector<VertexSet>& w) const {
        const auto all = all_ksubsets(n_, k_);
        std::vector<SetFamily> fams;
        for (VertexSet f : w) fams.push_back(family_of_vertices(n_, k_, all, f));
        return FamilyTuple(std::move(fams));
    }

    int n_;
    int k_;
    std::size_t cap_;
    bool collect_;
    std::atomic<std::size_t> best_{0};
    std::atomic<bool> found_{false};
    bool overflow_ = false;
    std::mutex lock_;
    std::vector<std::vector<VertexSet>> raw_;
};

SearchResult base_result(Mode mode, int n, int k, int r, const LSpec& L) {
    SearchResult out;
    out.mode = mode;
    out.n = n;
    out.k = k;
    out.r = r;
    out.L = L.values();
    return out;
}

void check_instance(int n, int k, int r, const LSpec& L) {
    if (k < 2 || n < k) throw ParameterError("need n >= k >= 2");
    if (n > kMaxGround) throw ParameterError("ground set size must not exceed 63");
    if (r < 2) throw ParameterError("need r >= 2");
    if (L.k() != k) throw ParameterError("L is defined for a different uniformity");
}

// ---------------------------------------------------------------------------
// Cross2 witness census: every optimal pair (A, B) has B = Y \ N(A) and
// A = X \ N(B), so A is closed under A -> X \ N(Y \ N(A)). Closed sets are
// listed with Ganter's next-closure algorithm.

struct ClosedSetCensus {
    const std::vector<VertexSet>& adj;
    VertexSet full;
    std::size_t side;

    VertexSet neighborhood(VertexSet s) const {
        VertexSet out = 0;
        for (VertexSet m = s; m; m &= m - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(m))];
        return out;
    }
    VertexSet closure(VertexSet a) const { return full & ~neighborhood(full & ~neighborhood(a)); }

    /// Calls visit(A) for each closed set; false when the budget ran out.
    template <class Visit>
    bool run(std::size_t budget, Visit&& visit) const {
        std::size_t calls = 1;
        VertexSet a = closure(0);
        visit(a);
        for (;;) {
            bool advanced = false;
            for (std::size_t i = side; i-- > 0;) {
                const VertexSet bit = VertexSet{1} << i;
                if (a & bit) continue;
                const VertexSet below = bit - 1;
                if (++calls > budget) return false;
                const VertexSet b = closure((a & below) | bit);
                if ((b & below) == (a & below)) {
                    a = b;
                    visit(a);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) return true;
        }
    }
};

std::vector<VertexSet> word_adjacency(int n, int k, const LSpec& L) {
    const auto all = all_ksubsets(n, k);
    std::vector<VertexSet> adj(all.size(), 0);
    for (std::size_t x = 0; x < all.size(); ++x)
        for (std::size_t y = 0; y < all.size(); ++y)
            if (!L.contains(std::popcount(all[x] & all[y]))) adj[x] |= VertexSet{1} << y;
    return adj;
}

VertexSet full_vertex_set(std::size_t side) { return side == 64 ? ~VertexSet{0} : (VertexSet{1} << side) - 1; }

}  // namespace

SearchResult oracle_cross2_max(int n, int k, const LSpec& L, const SearchOptions& opts) {
    check_instance(n, k, 2, L);
    SearchResult out = base_result(Mode::Cross2, n, k, 2, L);
    const IntersectionGraph g(n, k, L);
    AlphaOptions alpha_opts;
    alpha_opts.threads = opts.threads;
    const auto alpha = alpha_nontrivial(g, alpha_opts);
    out.complete = true;
    if (!alpha) {
        out.witnesses_complete = true;
        return out;
    }
    out.max_sum = alpha->value;

    const std::size_t side = g.side_size();
    if (!opts.collect_witnesses || side > 64) {
        out.witnesses.push_back(FamilyTuple({alpha->a, alpha->b}));
        if (n <= kMaxCanonicalDegree) out.keys.push_back(canonical_form(out.witnesses.back()));
        out.witnesses_complete = false;
        return out;
    }

    const auto adj = word_adjacency(n, k, L);
    const VertexSet full = full_vertex_set(side);
    ClosedSetCensus census{adj, full, side};
    WitnessPool pool(n, k, opts.witness_cap, true);
    const bool finished = census.run(opts.witness_budget, [&](VertexSet a) {
        ++out.nodes;
        if (a == 0) return;
        const VertexSet b = full & ~census.neighborhood(a);
        if (b == 0) return;
        const std::size_t total = static_cast<std::size_t>(std::popcount(a) + std::popcount(b));
        if (total == alpha->value) pool.offer(total, {a, b});
    });
    pool.finish(out);
    out.witnesses_complete = finished && !pool.overflowed();
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Branch and bound for r families. Families are chosen in order of
// nondecreasing size; the first family runs over orbit representatives
// only. Each level enumerates nonempty subsets of its candidate region and
// the last family is the largest set compatible with all earlier ones.

struct Profiles {
    std::vector<std::uint64_t> items;  // sorted, distinct

    Profiles with_meets(const Profiles& base, std::uint64_t mask) const {
        Profiles out;
        out.items.reserve(items.size() + base.items.size());
        std::vector<std::uint64_t> added;
        added.reserve(base.items.size());
        for (std::uint64_t p : base.items) added.push_back(p & mask);
        std::sort(added.begin(), added.end());
        std::set_union(items.begin(), items.end(), added.begin(), added.end(), std::back_inserter(out.items));
        out.items.erase(std::unique(out.items.begin(), out.items.end()), out.items.end());
        return out;
    }
};

class FamilySearch {
public:
    FamilySearch(Mode mode, int n, int k, int r, const LSpec& L, const SearchOptions& opts, WitnessPool& pool)
        : mode_(mode), n_(n), k_(k), r_(r), L_(L), opts_(opts), pool_(pool), all_(all_ksubsets(n, k)) {
        side_ = all_.size();
        if (side_ > 64) throw ParameterError("branch and bound needs C(n, k) <= 64");
        full_ = full_vertex_set(side_);
        compat_.assign(side_, 0);
        for (std::size_t x = 0; x < side_; ++x)
            for (std::size_t y = 0; y < side_; ++y)
                if (L.contains(std::popcount(all_[x] & all_[y]))) compat_[x] |= VertexSet{1} << y;
        group_ = cached_group(n, k);
    }

    /// Explores everything; returns false when the node budget ran out.
    bool run() {
        struct Task {
            VertexSet a;
            std::size_t next;
            bool expand;
        };
        // Seeds: the canonical singletons processed alone, and their
        // canonical two-element extensions with full subtrees.
        std::vector<Task> tasks;
        for (std::size_t v = 0; v < side_; ++v) {
            const VertexSet one = VertexSet{1} << v;
            if (group_ && !group_->is_canonical(one)) continue;
            tasks.push_back({one, v + 1, false});
            for (std::size_t u = v + 1; u < side_; ++u) {
                const VertexSet two = one | (VertexSet{1} << u);
                if (group_ && !group_->is_canonical(two)) continue;
                tasks.push_back({two, u + 1, true});
            }
        }
        std::atomic<std::size_t> cursor{0};
        auto worker = [&]() {
            Worker w(*this);
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= tasks.size() || exhausted()) return;
                w.seed(tasks[i].a, tasks[i].next, tasks[i].expand);
            }
        };
        const unsigned threads = std::max(1u, opts_.threads);
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        return !exhausted();
    }

    std::size_t nodes() const noexcept { return nodes_.load(); }

private:
    bool exhausted() const noexcept { return nodes_.load(std::memory_order_relaxed) > opts_.budget; }

    bool prune(std::size_t bound) const {
        if (!pool_.found()) return false;
        const std::size_t best = pool_.best();
        return pool_.collecting() ? bound < best : bound <= best;
    }

    VertexSet weak_region(const Profiles& p) const {
        const int least = L_.min();
        VertexSet out = 0;
        for (std::size_t v = 0; v < side_; ++v) {
            bool ok = true;
            for (std::uint64_t q : p.items)
                if (std::popcount(q & all_[v]) < least) {
                    ok = false;
                    break;
                }
            if (ok) out |= VertexSet{1} << v;
        }
        return out;
    }

    VertexSet exact_region(const Profiles& p) const {
        VertexSet out = 0;
        for (std::size_t v = 0; v < side_; ++v) {
            bool ok = true;
            for (std::uint64_t q : p.items)
                if (!L_.contains(std::popcount(q & all_[v]))) {
                    ok = false;
                    break;
                }
            if (ok) out |= VertexSet{1} << v;
        }
        return out;
    }

    // Per-thread recursion state.
    class Worker {
    public:
        explicit Worker(FamilySearch& s) : s_(s), chosen_(static_cast<std::size_t>(s.r_), 0) {}

        void seed(VertexSet a, std::size_t next, bool expand) {
            if (s_.mode_ == Mode::Pairwise) {
                VertexSet region = s_.full_;
                for (VertexSet m = a; m; m &= m - 1) region &= s_.compat_[static_cast<std::size_t>(std::countr_zero(m))];
                pairwise_node(0, s_.full_, 0, 0, a, region, next, expand);
            } else {
                Profiles root{{full_mask(s_.n_)}};
                Profiles after;
                for (VertexSet m = a; m; m &= m - 1) after = after.with_meets(root, s_.all_[static_cast<std::size_t>(std::countr_zero(m))]);
                rcross_node(0, root, s_.full_, 0, 0, a, after, next, expand);
            }
        }

    private:
        bool count_node() { return s_.nodes_.fetch_add(1, std::memory_order_relaxed) < s_.opts_.budget; }

        void record(std::size_t total) { s_.pool_.offer(total, chosen_); }

        // -- pairwise ------------------------------------------------------
        void pairwise_level(int j, VertexSet region, std::size_t sum, std::size_t prev) {
            if (j == s_.r_ - 1) {
                if (region == 0) return;
                chosen_[static_cast<std::size_t>(j)] = region;
                record(sum + static_cast<std::size_t>(std::popcount(region)));
                return;
            }
            pairwise_extend(j, region, sum, prev, 0, region, 0);
        }

        // Node: family j currently `a`, later families confined to `after`.
        void pairwise_node(int j, VertexSet region, std::size_t sum, std::size_t prev, VertexSet a, VertexSet after,
                           std::size_t next, bool expand) {
            if (!count_node()) return;
            const std::size_t bound = sum + static_cast<std::size_t>(s_.r_ - j) * std::popcount(after);
            if (s_.prune(bound)) return;
            const auto size = static_cast<std::size_t>(std::popcount(a));
            if (size >= prev) {
                chosen_[static_cast<std::size_t>(j)] = a;
                pairwise_level(j + 1, after, sum + size, size);
            }
            if (expand) pairwise_extend(j, region, sum, prev, a, after, next);
        }

        void pairwise_extend(int j, VertexSet region, std::size_t sum, std::size_t prev, VertexSet a, VertexSet after,
                             std::size_t next) {
            for (std::size_t v = next; v < s_.side_; ++v) {
                if (!((region >> v) & 1U)) continue;
                if (s_.exhausted()) return;
                const VertexSet child = a | (VertexSet{1} << v);
                if (j == 0 && s_.group_ && !s_.group_->is_canonical(child)) continue;
                pairwise_node(j, region, sum, prev, child, after & s_.compat_[v], v + 1, true);
            }
        }

        // -- r-cross -------------------------------------------------------
        void rcross_level(int j, const Profiles& p, std::size_t sum, std::size_t prev) {
            if (j == s_.r_ - 1) {
                const VertexSet last = s_.exact_region(p);
                if (last == 0) return;
                chosen_[static_cast<std::size_t>(j)] = last;
                record(sum + static_cast<std::size_t>(std::popcount(last)));
                return;
            }
            rcross_extend(j, p, s_.weak_region(p), sum, prev, 0, Profiles{}, 0);
        }

        void rcross_node(int j, const Profiles& p, VertexSet candidates, std::size_t sum, std::size_t prev,
                         VertexSet a, const Profiles& after, std::size_t next, bool expand) {
            if (!count_node()) return;
            const VertexSet later = j == s_.r_ - 2 ? s_.exact_region(after) : s_.weak_region(after);
            const std::size_t bound = sum + static_cast<std::size_t>(s_.r_ - j) * std::popcount(later);
            if (s_.prune(bound)) return;
            const auto size = static_cast<std::size_t>(std::popcount(a));
            if (size >= prev) {
                chosen_[static_cast<std::size_t>(j)] = a;
                rcross_level(j + 1, after, sum + size, size);
            }
            if (expand) rcross_extend(j, p, candidates, sum, prev, a, after, next);
        }

        void rcross_extend(int j, const Profiles& p, VertexSet candidates, std::size_t sum, std::size_t prev,
                           VertexSet a, const Profiles& after, std::size_t next) {
            for (std::size_t v = next; v < s_.side_; ++v) {
                if (!((candidates >> v) & 1U)) continue;
                if (s_.exhausted()) return;
                const VertexSet child = a | (VertexSet{1} << v);
                if (j == 0 && s_.group_ && !s_.group_->is_canonical(child)) continue;
                rcross_node(j, p, candidates, sum, prev, child, after.with_meets(p, s_.all_[v]), v + 1, true);
            }
        }

        FamilySearch& s_;
        std::vector<VertexSet> chosen_;
    };

    Mode mode_;
    int n_;
    int k_;
    int r_;
    LSpec L_;
    SearchOptions opts_;
    WitnessPool& pool_;
    std::vector<std::uint64_t> all_;
    std::size_t side_ = 0;
    VertexSet full_ = 0;
    std::vector<VertexSet> compat_;
    const RankPermutations* group_ = nullptr;
    std::atomic<std::size_t> nodes_{0};
};

SearchResult branch_and_bound(Mode mode, int n, int k, int r, const LSpec& L, const SearchOptions& opts) {
    SearchResult out = base_result(mode, n, k, r, L);
    WitnessPool pool(n, k, opts.witness_cap, opts.collect_witnesses);
    FamilySearch search(mode, n, k, r, L, opts, pool);
    out.complete = search.run();
    out.nodes = search.nodes();
    if (pool.found()) out.max_sum = pool.best();
    pool.finish(out);
    out.witnesses_complete = out.complete && opts.collect_witnesses && !pool.overflowed();
    return out;
}

}  // namespace

SearchResult oracle_pairwise_max(int n, int k, int r, const LSpec& L, const SearchOptions& opts) {
    check_instance(n, k, r, L);
    return branch_and_bound(Mode::Pairwise, n, k, r, L, opts);
}

SearchResult oracle_rcross_max(int n, int k, int r, const LSpec& L, const SearchOptions& opts) {
    check_instance(n, k, r, L);
    if (r == 2 && !opts.force_branch_and_bound) {
        SearchResult out = oracle_cross2_max(n, k, L, opts);
        out.mode = Mode::RCross;
        return out;
    }
    return branch_and_bound(Mode::RCross, n, k, r, L, opts);
}

SearchResult run_oracle(Mode mode, int n, int k, int r, const LSpec& L, const SearchOptions& opts) {
    switch (mode) {
        case Mode::Cross2: return oracle_cross2_max(n, k, L, opts);
        case Mode::Pairwise: return oracle_pairwise_max(n, k, r, L, opts);
        case Mode::RCross: return oracle_rcross_max(n, k, r, L, opts);
    }
    throw ParameterError("unknown mode");
}

namespace {

// Keys of every configuration a listed extremal class describes; empty
// optional when a seed enumeration would be too large.
std::optional<std::set<CanonicalKey>> theorem_keys(int n, int k, const LSpec& L,
                                                   const std::vector<std::string>& classes) {
    std::set<CanonicalKey> keys;
    const auto all = all_ksubsets(n, k);
    const std::size_t side = all.size();
    constexpr std::size_t max_seed_bits = 22;
    const RankPermutations* group = cached_group(n, k);
    for (const auto& name : classes) {
        const Cross2Variant v = parse_cross2_variant(name);
        if (v == Cross2Variant::ComplementSplit) {
            if (side > max_seed_bits) return std::nullopt;
            const VertexSet full = full_vertex_set(side);
            for (VertexSet a = 1; a < full; ++a) {
                if (group && !group->is_canonical(a)) continue;
                keys.insert(key_of_vertices(n, k, {a, full & ~a}));
            }
        } else if (v == Cross2Variant::ComplementClosed) {
            // Complementary pairs {A, [n] \ A}, indexed by the member with the smaller rank.
            std::vector<VertexSet> pairs;
            for (std::size_t i = 0; i < side; ++i) {
                const std::uint64_t other = full_mask(n) & ~all[i];
                const auto j = static_cast<std::size_t>(colex_rank(other));
                if (i < j) pairs.push_back((VertexSet{1} << i) | (VertexSet{1} << j));
            }
            if (pairs.size() > max_seed_bits) return std::nullopt;
            const VertexSet full = full_vertex_set(side);
            for (std::uint64_t pick = 1; pick + 1 < (std::uint64_t{1} << pairs.size()); ++pick) {
                VertexSet a = 0;
                for (std::size_t b = 0; b < pairs.size(); ++b)
                    if ((pick >> b) & 1U) a |= pairs[b];
                keys.insert(key_of_vertices(n, k, {a, full & ~a}));
            }
        } else {
            const auto pair = construct_cross2_extremal(n, k, L, v);
            keys.insert(canonical_form(FamilyTuple({pair.first, pair.second})));
        }
    }
    return keys;
}

void compare_keys(CharacterizationReport& report, const std::set<CanonicalKey>& oracle,
                  const std::set<CanonicalKey>& theorem) {
    report.oracle_keys.assign(oracle.begin(), oracle.end());
    report.theorem_keys.assign(theorem.begin(), theorem.end());
    std::set_difference(theorem.begin(), theorem.end(), oracle.begin(), oracle.end(), std::back_inserter(report.missing));
    std::set_difference(oracle.begin(), oracle.end(), theorem.begin(), theorem.end(), std::back_inserter(report.extra));
    report.status = report.missing.empty() && report.extra.empty() ? WitnessMatch::Match : WitnessMatch::Mismatch;
}

}  // namespace

CharacterizationReport verify_characterization(int n, int k, const LSpec& L, const SearchOptions& opts) {
    if (n > kMaxCanonicalDegree) throw ParameterError("characterization checks need n <= 10");
    CharacterizationReport report;
    report.mode = Mode::Cross2;
    report.n = n;
    report.k = k;
    report.L = L.values();
    const BoundResult bound = bound_cross2(n, k, L);
    report.bound_value = bound.value;
    report.theorem_classes = bound.extremal_classes;
    SearchOptions search_opts = opts;
    search_opts.collect_witnesses = true;
    const SearchResult oracle = oracle_cross2_max(n, k, L, search_opts);
    report.oracle_value = oracle.max_sum;
    if (bound.infeasible() || !oracle.max_sum) {
        report.status = bound.infeasible() == !oracle.max_sum ? WitnessMatch::Match : WitnessMatch::Mismatch;
        report.detail = "infeasible instance";
        return report;
    }
    if (!oracle.witnesses_complete) {
        report.status = WitnessMatch::Unknown;
        report.detail = "witness census incomplete";
        return report;
    }
    const auto theorem = theorem_keys(n, k, L, bound.extremal_classes);
    if (!theorem) {
        report.status = WitnessMatch::Unknown;
        report.detail = "seed enumeration for the listed classes too large";
        return report;
    }
    compare_keys(report, {oracle.keys.begin(), oracle.keys.end()}, *theorem);
    return report;
}

CharacterizationReport verify_pairwise_characterization(int n, int k, int r, const LSpec& L,
                                                        const SearchOptions& opts) {
    if (n > kMaxCanonicalDegree) throw ParameterError("characterization checks need n <= 10");
    CharacterizationReport report;
    report.mode = Mode::Pairwise;
    report.n = n;
    report.k = k;
    report.r = r;
    report.L = L.values();
    const BoundResult bound = bound_pairwise_L(n, k, r, L);
    if (bound.regime != "PAIRWISE_IV") throw ParameterError("only the k in L, non-interval case has a characterization");
    report.bound_value = bound.value;
    report.theorem_classes = bound.extremal_classes;
    SearchOptions search_opts = opts;
    search_opts.collect_witnesses = true;
    const SearchResult oracle = oracle_pairwise_max(n, k, r, L, search_opts);
    report.oracle_value = oracle.max_sum;
    if (!oracle.witnesses_complete || !oracle.max_sum) {
        report.status = WitnessMatch::Unknown;
        report.detail = "witness census incomplete";
        return report;
    }
    std::set<CanonicalKey> theorem{canonical_form(construct_pairwise_extremal(n, k, r, L))};
    compare_keys(report, {oracle.keys.begin(), oracle.keys.end()}, theorem);
    return report;
}

std::optional<int> empirical_threshold(const std::vector<std::pair<int, bool>>& points) {
    std::optional<int> start;
    for (const auto& [n, equal] : points) {
        if (equal && !start) start = n;
        if (!equal) start.reset();
    }
    return start;
}

}  // namespace crossl
