#include "crossl/bounds.hpp"

#include <algorithm>
#include <cctype>

#include "crossl/family.hpp"

namespace crossl {

namespace {

void check_basic(int n, int k, const LSpec& L) {
    if (k < 2 || n < k) throw ParameterError("need n >= k >= 2");
    if (n > kMaxGround) throw ParameterError("ground set size must not exceed 63");
    if (L.k() != k) throw ParameterError("L is defined for a different uniformity");
}

BoundResult base_result(Mode mode, int n, int k, int r, const LSpec& L) {
    BoundResult out;
    out.mode = mode;
    out.n = n;
    out.k = k;
    out.r = r;
    out.L = L.values();
    for (int i : out.L) out.terms.emplace_back(i, meeting_count(n, k, i));
    return out;
}

}  // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Cross2: return "cross2";
        case Mode::Pairwise: return "pairwise";
        case Mode::RCross: return "rcross";
    }
    return "?";
}

Mode parse_mode(const std::string& text) {
    std::string lower;
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "cross2" || lower == "cross") return Mode::Cross2;
    if (lower == "pairwise") return Mode::Pairwise;
    if (lower == "rcross") return Mode::RCross;
    throw ParameterError("unknown mode '" + text + "' (expected cross2, pairwise or rcross)");
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::CaseI: return "CASE_I";
        case Regime::CaseII: return "CASE_II";
        case Regime::CaseIII: return "CASE_III";
        case Regime::Infeasible: return "INFEASIBLE";
    }
    return "?";
}

BigCount meeting_count(int n, int k, int i) {
    if (i < 0 || i > k) return 0;
    return binom_exact(k, i) * binom_exact(n - k, k - i);
}

BigCount meeting_sum(int n, int k, const LSpec& L) {
    BigCount sum = 0;
    for (int i : L.values()) sum += meeting_count(n, k, i);
    return sum;
}

RegimeInfo classify_regime(int n, int k, const LSpec& L) {
    check_basic(n, k, L);
    if (n >= 2 * k) {
        if (L.is_full()) return {Regime::CaseI, "n >= 2k and L = [0,k]"};
        if (n == 2 * k && L == L.reflect()) return {Regime::CaseIII, "n = 2k and L = k - L"};
        if (n == 2 * k) return {Regime::CaseII, "n = 2k and L not in {[0,k], k - L}"};
        return {Regime::CaseII, "n > 2k and L != [0,k]"};
    }
    const std::uint64_t window = full_mask(k + 1) & ~full_mask(2 * k - n);
    const std::uint64_t hit = L.bits() & window;
    if (hit == window) return {Regime::CaseI, "n < 2k and [2k-n,k] is contained in L"};
    if (hit == 0) return {Regime::Infeasible, "n < 2k and [2k-n,k] misses L"};
    return {Regime::CaseII, "n < 2k and [2k-n,k] meets L partially"};
}

BoundResult bound_cross2(int n, int k, const LSpec& L) {
    const RegimeInfo regime = classify_regime(n, k, L);
    BoundResult out = base_result(Mode::Cross2, n, k, 2, L);
    out.regime = to_string(regime.tag);
    const BigCount sum = meeting_sum(n, k, L);
    switch (regime.tag) {
        case Regime::CaseI:
            out.value = 2 * binom_exact(n, k);
            out.extremal_classes = {to_string(Cross2Variant::Complete)};
            break;
        case Regime::CaseII:
            out.value = sum + 1;
            for (Cross2Variant v : {Cross2Variant::StarPair, Cross2Variant::ComplementSplit, Cross2Variant::StarStar,
                                    Cross2Variant::Subcube})
                if (cross2_variant_applies(n, k, L, v)) out.extremal_classes.push_back(to_string(v));
            break;
        case Regime::CaseIII:
            out.value = sum + 2;
            for (Cross2Variant v : {Cross2Variant::PairMiddle, Cross2Variant::ComplementClosed})
                if (cross2_variant_applies(n, k, L, v)) out.extremal_classes.push_back(to_string(v));
            break;
        case Regime::Infeasible:
            break;
    }
    return out;
}

BigCount bound_ekr(int n, int k) {
    if (k < 1 || n < 2 * k) throw ParameterError("the EKR bound needs n >= 2k");
    return binom_exact(n - 1, k - 1);
}

ProductBound bound_deza_erdos_frankl(int n, int k, const LSpec& L) {
    if (L.k() != k) throw ParameterError("L is defined for a different uniformity");
    if (L.contains(k)) throw ParameterError("the product bound divides by k - l, so k must not be in L");
    BigRational value = 1;
    for (int l : L.values()) value *= BigRational(n - l, k - l);
    ProductBound out{value, numerator(value) / denominator(value), false};
    out.in_stated_range = k >= 3 && BigCount(n) >= (BigCount(1) << k) * k * k * k;
    return out;
}

WarnedCount bound_wang_zhang(int n, int a, int b, int t) {
    WarnedCount out;
    if (n < 4) out.warnings.push_back("n >= 4 fails");
    if (a < 2 || b < 2) out.warnings.push_back("a, b >= 2 fails");
    if (t >= std::min(a, b)) out.warnings.push_back("t < min{a,b} fails");
    if (a + b >= n + t) out.warnings.push_back("a + b < n + t fails");
    if (n == a + b && t == 1) out.warnings.push_back("(n,t) != (a+b,1) fails");
    if (binom_exact(n, a) > binom_exact(n, b)) out.warnings.push_back("C(n,a) <= C(n,b) fails");
    BigCount sum = 0;
    for (int i = 0; i <= t - 1; ++i) sum += binom_exact(a, i) * binom_exact(n - a, b - i);
    out.value = binom_exact(n, b) - sum + 1;
    return out;
}

namespace {

BranchedCount pick_branch(BigCount hm, BigCount star) {
    BranchedCount out{std::max(hm, star), hm, star, "TIE"};
    if (hm > star) out.winner = "HM";
    if (star > hm) out.winner = "STAR";
    return out;
}

BigCount lower_sum(int n, int k, int t) {
    BigCount sum = 0;
    for (int i = 0; i <= t - 1; ++i) sum += meeting_count(n, k, i);
    return sum;
}

}  // namespace

BranchedCount bound_pairwise_cross_intersecting(int n, int k, int r) {
    if (k < 1 || n < 2 * k) throw ParameterError("the pairwise cross-intersecting bound needs n >= 2k");
    if (r < 2) throw ParameterError("need r >= 2");
    return pick_branch(binom_exact(n, k) - binom_exact(n - k, k) + (r - 1), r * binom_exact(n - 1, k - 1));
}

BigCount max_t_intersecting(int n, int k, int t) {
    if (t < 1 || t > k || k > n) throw ParameterError("need 1 <= t <= k <= n");
    BigCount best = 0;
    for (int i = 0; i <= k - t; ++i) {
        const int core = t + 2 * i;
        if (core > n) break;
        BigCount count = 0;
        for (int j = t + i; j <= std::min(core, k); ++j) count += binom_exact(core, j) * binom_exact(n - core, k - j);
        best = std::max(best, count);
    }
    return best;
}

BranchedCount bound_pairwise_t(int n, int k, int t, int r) {
    if (!(k > t && t >= 1)) throw ParameterError("need k > t >= 1");
    if (n < 2 * k - t + 1) throw ParameterError("need n >= 2k - t + 1");
    if (r < 2) throw ParameterError("need r >= 2");
    return pick_branch(binom_exact(n, k) - lower_sum(n, k, t) + (r - 1), r * max_t_intersecting(n, k, t));
}

BoundResult bound_pairwise_L(int n, int k, int r, const LSpec& L) {
    check_basic(n, k, L);
    if (r < 2) throw ParameterError("need r >= 2");
    BoundResult out = base_result(Mode::Pairwise, n, k, r, L);
    int t = 0;
    if (L.is_full()) {
        out.regime = "PAIRWISE_I";
        out.value = r * binom_exact(n, k);
        out.extremal_classes = {"COMPLETE"};
        return out;
    }
    out.asymptotic = true;
    if (L.is_upper_interval(&t)) {
        out.regime = "PAIRWISE_II";
        const BigCount hm = binom_exact(n, k) - lower_sum(n, k, t) + (r - 1);
        const BigCount star = r * binom_exact(n - t, k - t);
        out.value = std::max(hm, star);
        return out;
    }
    if (L.is_interval(0, k - 1)) {
        out.regime = "PAIRWISE_III";
        out.value = binom_exact(n, k);
        out.extremal_classes = {"DISJOINT_PARTITION"};
        return out;
    }
    if (L.contains(k)) {
        out.regime = "PAIRWISE_IV";
        out.value = meeting_sum(n, k, L) + (r - 1);
        out.extremal_classes = {"PAIRWISE_STAR"};
        return out;
    }
    throw UnsupportedL("L = " + L.to_string() +
                       " has k outside L and is not [0,k-1]; no bound is known for this pairwise case, "
                       "so none is emitted");
}

ArgmaxCount bound_rcross_t(int n, int k, int t, int r) {
    if (t < 1 || t > k) throw ParameterError("need 1 <= t <= k");
    if (n < 2 * k - t) throw ParameterError("need n >= 2k - t");
    if (r < 2) throw ParameterError("need r >= 2");
    ArgmaxCount best{-1, t};
    for (int m = t; m <= k; ++m) {
        BigCount value = (r - 1) * binom_exact(n - m, k - m);
        for (int i = t; i <= k; ++i) value += binom_exact(m, i) * binom_exact(n - m, k - i);
        if (value > best.value) best = {value, m};
    }
    return best;
}

BigCount bound_rcross_interval(int n, int k, int r, int l, int s) {
    if (l < 0 || s <= l || s > k) throw ParameterError("need 0 <= l < s <= k");
    if (r < 2) throw ParameterError("need r >= 2");
    if (n < k) throw ParameterError("need n >= k");
    BigCount sum = 0;
    for (int i = s - l; i <= k - l; ++i) sum += binom_exact(k - l, i) * binom_exact(n - k, k - l - i);
    return (r - 1) * binom_exact(n - l, k - l) - sum + 1;
}

BoundResult bound_rcross_L(int n, int k, int r, const LSpec& L) {
    check_basic(n, k, L);
    if (r < 2) throw ParameterError("need r >= 2");
    BoundResult out = base_result(Mode::RCross, n, k, r, L);
    int lo = 0;
    int hi = 0;
    if (L.is_full()) {
        out.regime = "RCROSS_FULL";
        out.value = r * binom_exact(n, k);
        out.extremal_classes = {"COMPLETE"};
        return out;
    }
    if (!L.is_contiguous(&lo, &hi))
        throw UnsupportedL("r-cross bounds are known only for intervals; L = " + L.to_string() + " is not one");
    if (hi == k) {
        out.regime = "RCROSS_T";
        const ArgmaxCount best = bound_rcross_t(n, k, lo, r);
        out.value = best.value;
        out.extremal_classes = {"RCROSS_T_M" + std::to_string(best.argmax)};
        return out;
    }
    out.regime = "RCROSS_INTERVAL";
    out.asymptotic = true;
    out.value = bound_rcross_interval(n, k, r, lo, hi + 1);
    out.extremal_classes = {"RCROSS_INTERVAL"};
    return out;
}

BoundResult evaluate_bound(Mode mode, int n, int k, int r, const LSpec& L) {
    switch (mode) {
        case Mode::Cross2: return bound_cross2(n, k, L);
        case Mode::Pairwise: return bound_pairwise_L(n, k, r, L);
        case Mode::RCross: return bound_rcross_L(n, k, r, L);
    }
    throw ParameterError("unknown mode");
}

}  // namespace crossl
