#ifndef LWS_COINCHANGE_HPP
#define LWS_COINCHANGE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lws/core.hpp"
#include "lws/ext_value.hpp"
#include "lws/minplus.hpp"

namespace lws {

// Coin change: w[k-1] is the weight of denomination k (pos_inf = absent).
// Induces the Toeplitz weight model w_{i,j} = w_{j-i}.
struct CoinChangeInstance {
    std::size_t n = 0;
    std::vector<ExtValue> w;

    ToeplitzModel model() const { return ToeplitzModel(n, w); }
    std::int64_t max_abs_finite() const;
};

// Unbounded knapsack: profits[i-1] >= 0 is the profit of the size-i item,
// or -1 when no item of that size exists.
struct KnapsackInstance {
    std::size_t n = 0;
    std::vector<std::int64_t> profits;
};

// One threshold probe: does some index i have T[i] <= thresholds[i]?
// thresholds entries are finite, -inf (index masked out) or +inf (index
// qualifies whenever T[i] is finite).
struct ThresholdQuery {
    std::vector<ExtValue> coin_weights;   // w~_1..w~_M
    std::vector<ExtValue> thresholds;     // r~_1..r~_M
};

using CcSolver = std::function<ExtValue(const CoinChangeInstance&)>;

// T[n] of the induced LWS instance; pos_inf when n is not representable.
ExtValue solve_cc(const CoinChangeInstance& inst);

// Output-intensive version: the full table T[0..n] (naive reference).
DpTable solve_oicc(const CoinChangeInstance& inst);

// Static-LWS over the Toeplitz model answered by one (min,+)-convolution of
// u = (pad, T[a+1..a+N], pad^N) and v = (pad, w_1..w_2N); pos_inf entries are
// mapped to a finite padding constant and back.
std::vector<ExtValue> static_cc_via_minplus(const CoinChangeInstance& inst, const StaticQuery& q,
                                            const MinPlusKernel& conv);
StaticBatchSolver make_cc_static_solver(const CoinChangeInstance& inst, const MinPlusKernel& conv);

// solve_via_static with the convolution-backed batch solver; equals
// solve_oicc exactly.
DpTable oicc_fast(const CoinChangeInstance& inst, const MinPlusKernel& conv);

// (min,+)-convolution -> oiCC: the 6n-coin gadget of the normalized inputs.
// extract() reads (a*b)_k = T[6n-2-k] - shift for k = 0..2n-2;
// check_range_identities() asserts the five structural ranges of the table,
// including the padding cell T[4n+1] = 4M.
struct MinPlusToOicc {
    CoinChangeInstance target;
    std::size_t source_len = 0;       // n
    std::int64_t big_m = 0;           // M = 2W+1 after normalization
    std::int64_t shift_a = 0;         // alpha added to a
    std::int64_t shift_b = 0;         // beta added to b
    std::vector<ExtValue> norm_a;     // a + alpha (2M..3M)
    std::vector<ExtValue> norm_b;     // b + beta  (0..M)

    CostVector extract(const DpTable& t) const;
    bool check_range_identities(const DpTable& t) const;
    // table index holding (a*b)_k, k = 0..2n-2: T[4n+i] = (a*b)_{2n-i}
    std::size_t table_index_of(std::size_t k) const { return 6 * source_len - k; }
    std::int64_t shift_total() const { return shift_a + shift_b; }
};
MinPlusToOicc reduce_minplus_to_oicc(const CostVector& a, const CostVector& b);

// CC -> UnboundedKnapsack with p_i = i*M - w_i, M = nW+1.
struct CcToKnapsack {
    KnapsackInstance target;
    std::size_t n = 0;
    std::int64_t big_m = 0;
    std::int64_t w_bound = 0;

    // T[n] from the knapsack optimum; pos_inf when the full budget is
    // unreachable with real items (optimum below n*M - n*W).
    ExtValue extract(std::int64_t best_profit) const;
};
CcToKnapsack cc_to_unbounded_knapsack(const CoinChangeInstance& inst);

// Max profit over multisets of total size <= n (empty multiset allowed).
// Implemented by negating profits into a CC instance and scanning the oiCC
// table minimum.
std::int64_t solve_unbounded_knapsack(const KnapsackInstance& inst);

// One CC-oracle probe deciding "exists i with T[i] <= r~_i" and returning a
// witness index. Gadget: the w~ coins plus one return coin per index, with
// the witness index folded into the scaled return-coin weights.
std::optional<std::size_t> threshold_query(const ThresholdQuery& q, const CcSolver& cc_oracle);

struct OiccViaCcStats {
    std::size_t probes = 0;
    std::size_t max_probes_per_round_per_j = 0;
    std::size_t rounds = 0;
};

// Full machinery of the oiCC -> CC direction: sqrt(n) ranges, naive fill of
// the first two, then parallel binary search per range with the k = 1..j
// two-range convolution subproblems probed through threshold_query.
DpTable oicc_via_cc(const CoinChangeInstance& inst, const CcSolver& cc_oracle,
                    OiccViaCcStats* stats = nullptr);

}  // namespace lws

#endif
