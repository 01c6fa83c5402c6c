#include "crossl/combinatorics.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace crossl {

BigCount binom_exact(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    BigCount result = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        result *= (a - b + i);
        result /= i;
    }
    return result;
}

std::uint64_t binom_u64(int a, int b) {
    if (a < 0 || b < 0) throw ParameterError("binom_u64: negative argument");
    if (b > a) return 0;
    BigCount value = binom_exact(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    if (value > std::numeric_limits<std::uint64_t>::max())
        throw ParameterError("binomial coefficient overflows 64 bits");
    return value.convert_to<std::uint64_t>();
}

double binom_real(double x, int k) {
    if (k < 0) throw ParameterError("binom_real: k must be nonnegative");
    long double result = 1.0L;
    for (int i = 0; i < k; ++i) {
        result *= (static_cast<long double>(x) - i);
        result /= (i + 1);
    }
    return static_cast<double>(result);
}

double solve_binom_inverse(std::uint64_t m, int k) {
    if (m < 1 || k < 1) throw ParameterError("solve_binom_inverse: need m >= 1 and k >= 1");
    constexpr double tolerance = 1e-9;
    constexpr int max_iterations = 200;
    const auto target = static_cast<double>(m);

    double lo = k - 1.0;
    double hi = k;
    while (binom_real(hi, k) < target) hi *= 2.0;

    double mid = hi;
    for (int it = 0; it < max_iterations; ++it) {
        mid = lo + (hi - lo) / 2.0;
        const double value = binom_real(mid, k);
        if (std::abs(value - target) <= tolerance) break;
        if (value < target)
            lo = mid;
        else
            hi = mid;
        if (!(lo < mid && mid < hi) && hi - lo <= std::numeric_limits<double>::epsilon() * hi) break;
    }
    return mid;
}

KSubset::KSubset(std::uint64_t mask_, int n_) : mask(mask_), n(n_) {
    if (n < 0 || n > kMaxGround) throw ParameterError("ground set size must lie in [0, 63]");
    if ((mask & ~full_mask(n)) != 0) throw ParameterError("subset has an element above n");
}

KSubset KSubset::from_elements(const std::vector<int>& elements, int n) {
    std::uint64_t mask = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw ParameterError("element " + std::to_string(e) + " outside [1, n]");
        const std::uint64_t bit = std::uint64_t{1} << (e - 1);
        if (mask & bit) throw ParameterError("duplicate element " + std::to_string(e));
        mask |= bit;
    }
    return KSubset(mask, n);
}

int KSubset::k() const noexcept { return popcount(mask); }

std::vector<int> KSubset::elements() const {
    std::vector<int> out;
    for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool KSubset::contains(int element) const noexcept {
    return element >= 1 && element <= 64 && ((mask >> (element - 1)) & 1U);
}

std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::uint64_t prefix_mask(int count) { return full_mask(count); }

std::uint64_t interval_mask(int lo, int hi) {
    if (hi < lo) return 0;
    return full_mask(hi) & ~full_mask(lo - 1);
}

int popcount(std::uint64_t mask) noexcept { return std::popcount(mask); }

std::uint64_t colex_rank(std::uint64_t mask) {
    std::uint64_t rank = 0;
    int j = 1;
    for (std::uint64_t m = mask; m; m &= m - 1, ++j) rank += binom_u64(std::countr_zero(m), j);
    return rank;
}

std::uint64_t colex_unrank(std::uint64_t rank, int n, int k) {
    if (k < 0 || k > n) throw ParameterError("colex_unrank: need 0 <= k <= n");
    if (rank >= binom_u64(n, k)) throw ParameterError("colex_unrank: rank out of range");
    std::uint64_t mask = 0;
    int top = n - 1;
    for (int j = k; j >= 1; --j) {
        while (binom_u64(top, j) > rank) --top;
        mask |= std::uint64_t{1} << top;
        rank -= binom_u64(top, j);
        --top;
    }
    return mask;
}

std::uint64_t next_same_popcount(std::uint64_t mask) noexcept {
    const std::uint64_t lowest = mask & (~mask + 1);
    const std::uint64_t ripple = mask + lowest;
    return ripple | (((mask ^ ripple) >> 2) / lowest);
}

std::vector<std::uint64_t> all_ksubsets(int n, int k) {
    if (n < 0 || n > kMaxGround) throw ParameterError("ground set size must lie in [0, 63]");
    if (k < 0 || k > n) return {};
    std::vector<std::uint64_t> out;
    out.reserve(binom_u64(n, k));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint64_t limit = full_mask(n);
    for (std::uint64_t m = prefix_mask(k);;) {
        out.push_back(m);
        if (m == (limit & ~full_mask(n - k))) break;
        m = next_same_popcount(m);
    }
    return out;
}

LSpec::LSpec(std::uint64_t allowed, int k) : allowed_(allowed), k_(k) {
    if (k < 0 || k > kMaxGround) throw ParameterError("LSpec: k out of range");
    if (allowed == 0) throw ParameterError("L must be nonempty");
    if (allowed & ~full_mask(k + 1)) throw ParameterError("L must be a subset of [0, k]");
}

LSpec LSpec::from_values(const std::vector<int>& values, int k) {
    std::uint64_t bits = 0;
    for (int v : values) {
        if (v < 0 || v > k) throw ParameterError("L value " + std::to_string(v) + " outside [0, k]");
        bits |= std::uint64_t{1} << v;
    }
    return LSpec(bits, k);
}

LSpec LSpec::interval(int lo, int hi, int k) {
    if (lo < 0 || hi > k || lo > hi) throw ParameterError("L interval outside [0, k] or empty");
    return LSpec(full_mask(hi + 1) & ~full_mask(lo), k);
}

LSpec LSpec::full(int k) { return interval(0, k, k); }

namespace {

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParameterError("cannot parse integer '" + std::string(s) + "' in L");
    return value;
}

}  // namespace

LSpec LSpec::parse(std::string_view text, int k) {
    if (text == "all") return full(k);
    std::uint64_t bits = 0;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            const int v = parse_int(item);
            if (v < 0 || v > k) throw ParameterError("L value " + std::to_string(v) + " outside [0, k]");
            bits |= std::uint64_t{1} << v;
        } else {
            const int lo = parse_int(item.substr(0, dots));
            const int hi = parse_int(item.substr(dots + 2));
            bits |= interval(lo, hi, k).bits();
        }
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return LSpec(bits, k);
}

bool LSpec::contains(int i) const noexcept { return i >= 0 && i <= k_ && ((allowed_ >> i) & 1U); }

std::vector<int> LSpec::values() const {
    std::vector<int> out;
    for (int i = 0; i <= k_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

int LSpec::min() const { return std::countr_zero(allowed_); }
int LSpec::max() const { return 63 - std::countl_zero(allowed_); }

std::uint64_t LSpec::complement_bits() const noexcept { return full_mask(k_ + 1) & ~allowed_; }

LSpec LSpec::reflect() const {
    std::uint64_t bits = 0;
    for (int i = 0; i <= k_; ++i)
        if (contains(i)) bits |= std::uint64_t{1} << (k_ - i);
    return LSpec(bits, k_);
}

bool LSpec::is_full() const noexcept { return allowed_ == full_mask(k_ + 1); }

bool LSpec::is_interval(int lo, int hi) const noexcept {
    if (lo < 0 || hi > k_ || lo > hi) return false;
    return allowed_ == (full_mask(hi + 1) & ~full_mask(lo));
}

bool LSpec::is_upper_interval(int* t) const noexcept {
    const int lo = min();
    if (!is_interval(lo, k_)) return false;
    if (t) *t = lo;
    return true;
}

bool LSpec::is_contiguous(int* lo, int* hi) const noexcept {
    const int a = min();
    const int b = max();
    if (!is_interval(a, b)) return false;
    if (lo) *lo = a;
    if (hi) *hi = b;
    return true;
}

bool LSpec::subset_of(const LSpec& other) const noexcept { return (allowed_ & ~other.allowed_) == 0; }

std::string LSpec::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int v : values()) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::vector<LSpec> all_lspecs(int k) {
    std::vector<LSpec> out;
    for (std::uint64_t bits = 1; bits <= full_mask(k + 1); ++bits) out.emplace_back(bits, k);
    return out;
}

}  // namespace crossl
