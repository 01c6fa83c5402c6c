#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossl/bounds.hpp"
#include "crossl/combinatorics.hpp"
#include "crossl/family.hpp"

namespace crossl {

/// Identifies a family tuple up to relabeling of [n] and reordering of the
/// families.
struct CanonicalKey {
    std::string bytes;

    std::string hex() const;
    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Largest n accepted by canonical_form (full relabeling search).
inline constexpr int kMaxCanonicalDegree = 10;

/// Minimum over all permutations of [n] of the relabeled tuple, families
/// sorted by (size, colex ranks).
CanonicalKey canonical_form(const FamilyTuple& t);

struct SearchOptions {
    /// Node budget for the branch-and-bound layers.
    std::size_t budget = 200'000'000;
    bool collect_witnesses = true;
    /// Closed-set enumeration budget for the cross2 witness census.
    std::size_t witness_budget = 10'000'000;
    /// Raw witnesses kept before the census is declared incomplete.
    std::size_t witness_cap = 200'000;
    unsigned threads = 1;
    /// Run the branch-and-bound layer for r = 2 r-cross instead of the matching oracle.
    bool force_branch_and_bound = false;
};

struct SearchResult {
    Mode mode = Mode::Cross2;
    int n = 0;
    int k = 0;
    int r = 2;
    std::vector<int> L;
    std::optional<std::size_t> max_sum;  // empty when infeasible
    /// The maximum is exact (search exhausted).
    bool complete = true;
    /// Every optimal configuration is represented among the witnesses.
    bool witnesses_complete = false;
    std::vector<FamilyTuple> witnesses;  // one per isomorphism class, sorted by key
    std::vector<CanonicalKey> keys;  // empty unless witnesses are collected
    std::size_t nodes = 0;

    bool infeasible() const noexcept { return complete && !max_sum.has_value(); }
};

SearchResult oracle_cross2_max(int n, int k, const LSpec& L, const SearchOptions& opts = {});
SearchResult oracle_pairwise_max(int n, int k, int r, const LSpec& L, const SearchOptions& opts = {});
SearchResult oracle_rcross_max(int n, int k, int r, const LSpec& L, const SearchOptions& opts = {});
SearchResult run_oracle(Mode mode, int n, int k, int r, const LSpec& L, const SearchOptions& opts = {});

enum class WitnessMatch { Match, Mismatch, Unknown };
std::string to_string(WitnessMatch m);

struct CharacterizationReport {
    Mode mode = Mode::Cross2;
    int n = 0;
    int k = 0;
    int r = 2;
    std::vector<int> L;
    std::optional<std::size_t> oracle_value;
    std::optional<BigCount> bound_value;
    WitnessMatch status = WitnessMatch::Unknown;
    std::vector<std::string> theorem_classes;
    std::vector<CanonicalKey> oracle_keys;
    std::vector<CanonicalKey> theorem_keys;
    std::vector<CanonicalKey> missing;  // listed by the theorem, not found by the oracle
    std::vector<CanonicalKey> extra;    // found by the oracle, not listed
    std::string detail;
};

/// Compares the oracle's extremal census with the configurations the
/// characterization lists at (n, k, L).
CharacterizationReport verify_characterization(int n, int k, const LSpec& L, const SearchOptions& opts = {});
/// Same for the pairwise case with k in L and L not of the form [t, k].
CharacterizationReport verify_pairwise_characterization(int n, int k, int r, const LSpec& L,
                                                        const SearchOptions& opts = {});

/// Least tested n from which the oracle matches the formula through the end
/// of the tested range. Points must be sorted by n.
std::optional<int> empirical_threshold(const std::vector<std::pair<int, bool>>& points);

}  // namespace crossl
