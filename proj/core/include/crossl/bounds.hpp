#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crossl/combinatorics.hpp"

namespace crossl {

using BigRational = boost::multiprecision::cpp_rational;

enum class Mode { Cross2, Pairwise, RCross };

std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

enum class Regime { CaseI, CaseII, CaseIII, Infeasible };

std::string to_string(Regime r);

struct RegimeInfo {
    Regime tag;
    std::string clause;  // which condition fired
};

/// Thrown for L outside every proven case (the open problems); never
/// papered over with a fallback number.
class UnsupportedL : public ParameterError {
public:
    using ParameterError::ParameterError;
};

struct BoundResult {
    Mode mode = Mode::Cross2;
    int n = 0;
    int k = 0;
    int r = 2;
    std::vector<int> L;
    std::string regime;
    std::optional<BigCount> value;  // empty when infeasible
    bool asymptotic = false;
    std::vector<std::pair<int, BigCount>> terms;
    std::vector<std::string> extremal_classes;

    bool infeasible() const noexcept { return !value.has_value(); }
};

/// C(k, i) C(n-k, k-i): sets meeting a fixed k-set in exactly i points.
BigCount meeting_count(int n, int k, int i);
/// Sum of meeting_count over L.
BigCount meeting_sum(int n, int k, const LSpec& L);

RegimeInfo classify_regime(int n, int k, const LSpec& L);
BoundResult bound_cross2(int n, int k, const LSpec& L);

BigCount bound_ekr(int n, int k);

struct ProductBound {
    BigRational value;
    BigCount floor;
    bool in_stated_range;  // n >= 2^k k^3
};
ProductBound bound_deza_erdos_frankl(int n, int k, const LSpec& L);

struct WarnedCount {
    BigCount value;
    std::vector<std::string> warnings;
};
WarnedCount bound_wang_zhang(int n, int a, int b, int t);

struct BranchedCount {
    BigCount value;
    BigCount hilton_milner_branch;  // C(n,k) - sum + r - 1
    BigCount star_branch;           // r * (largest single family)
    std::string winner;             // "HM", "STAR" or "TIE"
};
BranchedCount bound_pairwise_cross_intersecting(int n, int k, int r);

/// Largest t-intersecting k-uniform family on [n], via the complete
/// intersection families {F : |F ∩ [t+2i]| >= t+i}.
BigCount max_t_intersecting(int n, int k, int t);
BranchedCount bound_pairwise_t(int n, int k, int t, int r);

BoundResult bound_pairwise_L(int n, int k, int r, const LSpec& L);

struct ArgmaxCount {
    BigCount value;
    int argmax;
};
ArgmaxCount bound_rcross_t(int n, int k, int t, int r);

BigCount bound_rcross_interval(int n, int k, int r, int l, int s);

/// Dispatch for the r-cross mode: full L, [t, k], or [l, s-1] with s <= k.
BoundResult bound_rcross_L(int n, int k, int r, const LSpec& L);

/// Mode-level dispatch used by the CLI and the verifier.
BoundResult evaluate_bound(Mode mode, int n, int k, int r, const LSpec& L);

}  // namespace crossl
