#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossl {

/// Exact nonnegative count (sizes of families, binomial sums).
using BigCount = boost::multiprecision::cpp_int;

/// Largest supported ground set; every k-subset of [n] fits one machine word.
inline constexpr int kMaxGround = 63;

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// C(a, b) exactly; zero when b > a.
BigCount binom_exact(std::uint64_t a, std::uint64_t b);

/// C(a, b) in a machine word. Throws ParameterError on overflow.
std::uint64_t binom_u64(int a, int b);

/// Generalized binomial x(x-1)...(x-k+1)/k!.
double binom_real(double x, int k);

/// The unique x > k-1 with binom_real(x, k) = m, by bisection.
double solve_binom_inverse(std::uint64_t m, int k);

/// Elements of [n] are 1-based; element e lives in bit e-1.
struct KSubset {
    std::uint64_t mask = 0;
    int n = 0;

    KSubset() = default;
    KSubset(std::uint64_t mask_, int n_);

    static KSubset from_elements(const std::vector<int>& elements, int n);

    int k() const noexcept;
    std::vector<int> elements() const;
    bool contains(int element) const noexcept;

    friend bool operator==(const KSubset&, const KSubset&) = default;
    /// Colex order: for equal k this is the numeric order of the masks.
    friend auto operator<=>(const KSubset& a, const KSubset& b) noexcept { return a.mask <=> b.mask; }
};

std::uint64_t full_mask(int n);
std::uint64_t prefix_mask(int count);
std::uint64_t interval_mask(int lo, int hi);
int popcount(std::uint64_t mask) noexcept;

/// Colexicographic rank of a k-subset among all C(n, k) subsets.
std::uint64_t colex_rank(std::uint64_t mask);
/// Inverse of colex_rank. Throws ParameterError when rank >= C(n, k).
std::uint64_t colex_unrank(std::uint64_t rank, int n, int k);

/// All k-subsets of [n] in colex order.
std::vector<std::uint64_t> all_ksubsets(int n, int k);

/// Next mask with the same popcount (Gosper's hack).
std::uint64_t next_same_popcount(std::uint64_t mask) noexcept;

/// Allowed intersection sizes: a nonempty subset of {0, ..., k}.
class LSpec {
public:
    LSpec(std::uint64_t allowed, int k);

    static LSpec from_values(const std::vector<int>& values, int k);
    static LSpec interval(int lo, int hi, int k);
    static LSpec full(int k);
    /// "0,2", "1..3", "0,2..4" or "all".
    static LSpec parse(std::string_view text, int k);

    std::uint64_t bits() const noexcept { return allowed_; }
    int k() const noexcept { return k_; }
    bool contains(int i) const noexcept;
    std::vector<int> values() const;
    int min() const;
    int max() const;

    /// {0..k} \ L; may be empty, so returned as a raw mask.
    std::uint64_t complement_bits() const noexcept;
    /// k - L.
    LSpec reflect() const;

    bool is_full() const noexcept;
    bool is_interval(int lo, int hi) const noexcept;
    /// True when L = [t, k] for some t in [0, k]; writes t.
    bool is_upper_interval(int* t = nullptr) const noexcept;
    /// True when L is a contiguous run [lo, hi].
    bool is_contiguous(int* lo = nullptr, int* hi = nullptr) const noexcept;
    bool subset_of(const LSpec& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const LSpec&, const LSpec&) = default;

private:
    std::uint64_t allowed_;
    int k_;
};

/// Every nonempty L over uniformity k, ordered by mask.
std::vector<LSpec> all_lspecs(int k);

}  // namespace crossl
