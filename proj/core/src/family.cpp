#include "crossl/family.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace crossl {

namespace {

void check_ground(int n, int k) {
    if (n < 0 || n > kMaxGround) throw ParameterError("ground set size must lie in [0, 63]");
    if (k < 0 || k > n) throw ParameterError("uniformity must lie in [0, n]");
}

void check_compatible(const SetFamily& a, const SetFamily& b) {
    if (a.n() != b.n() || a.k() != b.k()) throw ParameterError("families live over different (n, k)");
}

void check_L(const SetFamily& f, const LSpec& L) {
    if (L.k() != f.k()) throw ParameterError("L is defined for a different uniformity");
}

// Every s-subset S of [n] with its count |F(S)|.
std::vector<std::pair<std::uint64_t, std::uint64_t>> restriction_counts(const SetFamily& f, int s) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t S : all_ksubsets(f.n(), s)) {
        std::uint64_t count = 0;
        for (std::uint64_t F : f.masks())
            if ((F & S) == S) ++count;
        out.emplace_back(S, count);
    }
    return out;
}

}  // namespace

SetFamily::SetFamily(int n, int k) : n_(n), k_(k) { check_ground(n, k); }

SetFamily::SetFamily(int n, int k, std::vector<std::uint64_t> masks) : n_(n), k_(k), members_(std::move(masks)) {
    check_ground(n, k);
    const std::uint64_t ground = full_mask(n);
    for (std::uint64_t m : members_) {
        if (m & ~ground) throw ParameterError("family member has an element above n");
        if (std::popcount(m) != k) throw ParameterError("family member has the wrong size");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_lists(int n, int k, const std::vector<std::vector<int>>& sets) {
    std::vector<std::uint64_t> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(KSubset::from_elements(s, n).mask);
    return SetFamily(n, k, std::move(masks));
}

SetFamily SetFamily::complete(int n, int k) { return SetFamily(n, k, all_ksubsets(n, k)); }

bool SetFamily::contains(std::uint64_t mask) const {
    return std::binary_search(members_.begin(), members_.end(), mask);
}

std::vector<std::vector<int>> SetFamily::to_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(members_.size());
    for (std::uint64_t m : members_) out.push_back(KSubset(m, n_).elements());
    return out;
}

FamilyTuple::FamilyTuple(std::vector<SetFamily> families) : families_(std::move(families)) {
    if (families_.empty()) throw ParameterError("a family tuple needs at least one family");
    for (const auto& f : families_) check_compatible(f, families_.front());
}

std::size_t FamilyTuple::total_size() const noexcept {
    std::size_t total = 0;
    for (const auto& f : families_) total += f.size();
    return total;
}

bool FamilyTuple::all_nonempty() const noexcept {
    return std::none_of(families_.begin(), families_.end(), [](const SetFamily& f) { return f.empty(); });
}

int intersection_size(const KSubset& a, const KSubset& b) {
    if (a.n != b.n || a.k() != b.k()) throw ParameterError("intersection_size: subsets over different (n, k)");
    return std::popcount(a.mask & b.mask);
}

bool is_cross_L(const SetFamily& a, const SetFamily& b, const LSpec& L) {
    check_compatible(a, b);
    check_L(a, L);
    for (std::uint64_t x : a.masks())
        for (std::uint64_t y : b.masks())
            if (!L.contains(std::popcount(x & y))) return false;
    return true;
}

bool is_pairwise_cross_L(const FamilyTuple& t, const LSpec& L) {
    if (t.r() < 2) throw ParameterError("pairwise cross L-intersection needs r >= 2");
    for (std::size_t i = 0; i < t.r(); ++i)
        for (std::size_t j = i + 1; j < t.r(); ++j)
            if (!is_cross_L(t[i], t[j], L)) return false;
    return true;
}

bool is_rcross_L(const FamilyTuple& t, const LSpec& L) {
    if (t.r() < 2) throw ParameterError("r-cross L-intersection needs r >= 2");
    check_L(t[0], L);
    // Distinct partial intersections are all that matter.
    std::set<std::uint64_t> profiles(t[0].masks().begin(), t[0].masks().end());
    for (std::size_t i = 1; i < t.r(); ++i) {
        std::set<std::uint64_t> next;
        for (std::uint64_t p : profiles)
            for (std::uint64_t m : t[i].masks()) next.insert(p & m);
        profiles = std::move(next);
    }
    return std::all_of(profiles.begin(), profiles.end(), [&](std::uint64_t p) { return L.contains(std::popcount(p)); });
}

bool is_L_intersecting(const SetFamily& f, const LSpec& L) {
    check_L(f, L);
    const auto& m = f.masks();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!L.contains(std::popcount(m[i] & m[j]))) return false;
    return true;
}

SetFamily shadow(const SetFamily& f, int i) {
    if (i < 0 || i > f.k()) throw ParameterError("shadow order must lie in [0, k]");
    std::set<std::uint64_t> out;
    const int k = f.k();
    for (std::uint64_t F : f.masks()) {
        // Enumerate i-subsets of F by mapping i-subsets of [k] onto F's elements.
        std::vector<std::uint64_t> bits;
        for (std::uint64_t m = F; m; m &= m - 1) bits.push_back(m & (~m + 1));
        for (std::uint64_t pick : all_ksubsets(k, i)) {
            std::uint64_t G = 0;
            for (std::uint64_t p = pick; p; p &= p - 1) G |= bits[std::countr_zero(p)];
            out.insert(G);
        }
    }
    return SetFamily(f.n(), i, {out.begin(), out.end()});
}

SetFamily random_family(int n, int k, std::size_t size, std::uint64_t seed) {
    const std::uint64_t total = binom_u64(n, k);
    if (size > total) throw ParameterError("requested more sets than C(n, k)");
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> ranks(total);
    std::iota(ranks.begin(), ranks.end(), std::uint64_t{0});
    std::shuffle(ranks.begin(), ranks.end(), rng);
    std::vector<std::uint64_t> masks;
    masks.reserve(size);
    for (std::size_t j = 0; j < size; ++j) masks.push_back(colex_unrank(ranks[j], n, k));
    return SetFamily(n, k, std::move(masks));
}

ShadowCheck check_shadow_bound(const SetFamily& f, int i, double tolerance) {
    if (f.empty()) throw ParameterError("shadow bound needs a nonempty family");
    if (i < 1 || i > f.k()) throw ParameterError("shadow order must lie in [1, k]");
    ShadowCheck out;
    out.size = f.size();
    out.x = solve_binom_inverse(f.size(), f.k());
    out.shadow_size = shadow(f, i).size();
    out.lower_bound = binom_real(out.x, i);
    out.satisfied = static_cast<double>(out.shadow_size) >= out.lower_bound - tolerance;
    // Taking y with C(y, i) = |∂_i F| makes the premise of the converse hold with equality.
    out.shadow_x = solve_binom_inverse(out.shadow_size, i);
    out.family_bound = binom_real(out.shadow_x, f.k());
    out.converse_satisfied = static_cast<double>(out.size) <= out.family_bound + tolerance;
    return out;
}

SetFamily restrict_to(const SetFamily& f, std::uint64_t S) {
    if (S & ~full_mask(f.n())) throw ParameterError("restriction set leaves [n]");
    std::vector<std::uint64_t> out;
    for (std::uint64_t F : f.masks())
        if ((F & S) == S) out.push_back(F);
    return SetFamily(f.n(), f.k(), std::move(out));
}

SetFamily strip(const SetFamily& f, std::uint64_t S) {
    const int size = std::popcount(S);
    if (size > f.k()) throw ParameterError("strip set larger than k");
    const SetFamily kept = restrict_to(f, S);
    std::vector<std::uint64_t> out;
    for (std::uint64_t F : kept.masks()) out.push_back(F & ~S);
    return SetFamily(f.n(), f.k() - size, std::move(out));
}

SetFamily threshold_S(const SetFamily& f, int s) {
    const int n = f.n();
    const int k = f.k();
    if (s < 1 || s > k) throw ParameterError("threshold order s must lie in [1, k]");
    // 2|F(S)| > 3 C(n-s, k-s) - 2 C(n-k, k-s)
    const BigCount rhs = 3 * binom_exact(n - s, k - s) - 2 * binom_exact(n - k, k - s);
    std::vector<std::uint64_t> out;
    for (const auto& [S, count] : restriction_counts(f, s))
        if (BigCount(2) * count > rhs) out.push_back(S);
    return SetFamily(n, s, std::move(out));
}

SetFamily threshold_T(const SetFamily& f, int s) {
    const int n = f.n();
    const int k = f.k();
    if (s < 1 || s > k) throw ParameterError("threshold order s must lie in [1, k]");
    const BigCount rhs = binom_exact(n - s, k - s) - binom_exact(n - k, k - s);
    std::vector<std::uint64_t> out;
    for (const auto& [S, count] : restriction_counts(f, s))
        if (BigCount(count) >= rhs) out.push_back(S);
    return SetFamily(n, s, std::move(out));
}

SetFamily complement_family(const SetFamily& f) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : all_ksubsets(f.n(), f.k()))
        if (!f.contains(m)) out.push_back(m);
    return SetFamily(f.n(), f.k(), std::move(out));
}

SetFamily complement_sets(const SetFamily& f) {
    const std::uint64_t ground = full_mask(f.n());
    std::vector<std::uint64_t> out;
    out.reserve(f.size());
    for (std::uint64_t m : f.masks()) out.push_back(ground & ~m);
    return SetFamily(f.n(), f.n() - f.k(), std::move(out));
}

namespace {

const std::map<Cross2Variant, std::string>& variant_names() {
    static const std::map<Cross2Variant, std::string> names = {
        {Cross2Variant::StarPair, "STAR_PAIR"},
        {Cross2Variant::ComplementSplit, "COMPLEMENT_SPLIT"},
        {Cross2Variant::StarStar, "STAR_STAR"},
        {Cross2Variant::Subcube, "SUBCUBE"},
        {Cross2Variant::PairMiddle, "PAIR_MIDDLE"},
        {Cross2Variant::ComplementClosed, "COMPLEMENT_CLOSED"},
        {Cross2Variant::Complete, "COMPLETE"},
    };
    return names;
}

}  // namespace

std::string to_string(Cross2Variant v) { return variant_names().at(v); }

Cross2Variant parse_cross2_variant(const std::string& name) {
    std::string upper;
    for (char c : name) upper.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (const auto& [v, text] : variant_names())
        if (text == upper) return v;
    throw ParameterError("unknown cross2 variant '" + name + "'");
}

SetFamily sets_meeting_prefix_in(int n, int k, const LSpec& L) {
    const std::uint64_t head = prefix_mask(k);
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : all_ksubsets(n, k))
        if (L.contains(std::popcount(m & head))) out.push_back(m);
    return SetFamily(n, k, std::move(out));
}

bool cross2_variant_applies(int n, int k, const LSpec& L, Cross2Variant v) {
    if (k < 2 || n < k || L.k() != k) return false;
    switch (v) {
        case Cross2Variant::StarPair:
            return L.contains(k) || !sets_meeting_prefix_in(n, k, L).empty();
        case Cross2Variant::ComplementSplit: {
            if (L.contains(k)) return false;
            const int lo = std::max(0, 2 * k - n);
            for (int i = lo; i <= k - 1; ++i)
                if (!L.contains(i)) return false;
            return true;
        }
        case Cross2Variant::StarStar:
            return k == 2 && L.bits() == 0b110;
        case Cross2Variant::Subcube: {
            if (k != n - 2) return false;
            std::uint64_t window = L.bits() & (full_mask(k + 1) & ~full_mask(std::max(0, k - 2)));
            return window == ((std::uint64_t{1} << (k - 1)) | (std::uint64_t{1} << k));
        }
        case Cross2Variant::PairMiddle:
            return n == 2 * k && L == L.reflect();
        case Cross2Variant::ComplementClosed:
            return n == 2 * k && L.is_interval(1, k - 1);
        case Cross2Variant::Complete:
            return true;
    }
    return false;
}

std::pair<SetFamily, SetFamily> construct_cross2_extremal(int n, int k, const LSpec& L, Cross2Variant v,
                                                          const std::optional<SetFamily>& seed) {
    check_ground(n, k);
    if (!cross2_variant_applies(n, k, L, v))
        throw ParameterError("side conditions of " + to_string(v) + " fail at n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + " L=" + L.to_string());
    const std::uint64_t head = prefix_mask(k);
    switch (v) {
        case Cross2Variant::StarPair:
            return {SetFamily(n, k, {head}), sets_meeting_prefix_in(n, k, L)};
        case Cross2Variant::PairMiddle:
            return {SetFamily(n, k, {head, full_mask(n) & ~head}), sets_meeting_prefix_in(n, k, L)};
        case Cross2Variant::StarStar: {
            std::vector<std::uint64_t> star;
            for (std::uint64_t m : all_ksubsets(n, 2))
                if (m & 1U) star.push_back(m);
            SetFamily f(n, 2, star);
            return {f, f};
        }
        case Cross2Variant::Subcube: {
            SetFamily f(n, k, all_ksubsets(n - 1, k));
            return {f, f};
        }
        case Cross2Variant::Complete: {
            SetFamily f = SetFamily::complete(n, k);
            return {f, f};
        }
        case Cross2Variant::ComplementSplit:
        case Cross2Variant::ComplementClosed: {
            if (!seed || seed->empty()) throw ParameterError(to_string(v) + " needs a nonempty seed family");
            if (seed->n() != n || seed->k() != k) throw ParameterError("seed family has the wrong (n, k)");
            SetFamily a = *seed;
            if (v == Cross2Variant::ComplementClosed) {
                std::vector<std::uint64_t> closed = a.masks();
                for (std::uint64_t m : a.masks()) closed.push_back(full_mask(n) & ~m);
                a = SetFamily(n, k, std::move(closed));
            }
            SetFamily b = complement_family(a);
            if (b.empty()) throw ParameterError("seed family covers all of C([n], k)");
            return {a, b};
        }
    }
    throw ParameterError("unhandled variant");
}

FamilyTuple construct_pairwise_extremal(int n, int k, int r, const LSpec& L) {
    check_ground(n, k);
    if (r < 2) throw ParameterError("need r >= 2");
    if (!L.contains(k)) throw ParameterError("the pairwise construction needs k in L");
    std::vector<SetFamily> out(static_cast<std::size_t>(r - 1), SetFamily(n, k, {prefix_mask(k)}));
    out.push_back(sets_meeting_prefix_in(n, k, L));
    return FamilyTuple(std::move(out));
}

FamilyTuple construct_rcross_extremal(int n, int k, int r, int l, int s) {
    check_ground(n, k);
    if (r < 2) throw ParameterError("need r >= 2");
    if (l < 0 || l > k || s <= l || s > k) throw ParameterError("need 0 <= l < s <= k");
    const std::uint64_t head = prefix_mask(k);
    const std::uint64_t core = prefix_mask(l);
    std::vector<std::uint64_t> second;
    std::vector<std::uint64_t> star;
    for (std::uint64_t m : all_ksubsets(n, k)) {
        if ((m & core) != core) continue;
        star.push_back(m);
        if (std::popcount(m & head) <= s - 1) second.push_back(m);
    }
    std::vector<SetFamily> out;
    out.emplace_back(n, k, std::vector<std::uint64_t>{head});
    out.emplace_back(n, k, std::move(second));
    for (int i = 2; i < r; ++i) out.emplace_back(n, k, star);
    return FamilyTuple(std::move(out));
}

}  // namespace crossl
