#ifndef LWS_LOWRANK_HPP
#define LWS_LOWRANK_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lws/core.hpp"
#include "lws/ext_value.hpp"

namespace lws {

using Item = std::vector<std::int64_t>;

// LWS instance whose weight matrix has rank d: w(i, j) = <mu_i, sigma_j>.
struct LowRankInstance {
    std::size_t n = 0;             // items 0..n
    std::vector<Item> out_vecs;    // mu_0..mu_{n-1}
    std::vector<Item> in_vecs;     // sigma_1..sigma_n; in_vecs[j-1] = sigma_j

    std::size_t dim() const { return out_vecs.empty() ? 0 : out_vecs.front().size(); }
    std::int64_t max_abs_coord() const;
};

class LowRankModel : public WeightModel {
public:
    explicit LowRankModel(LowRankInstance inst);
    const LowRankInstance& instance() const { return inst_; }

protected:
    ExtValue query_impl(std::size_t i, std::size_t j) const override;

private:
    LowRankInstance inst_;
    bool dot_guarded_;
};

// a-side, b-side vector families plus the threshold r of MinInnProd.
struct InnerProductInstance {
    std::vector<Item> a;
    std::vector<Item> b;
    std::int64_t threshold = 0;    // r; ignored by AllInnProd

    std::size_t dim() const { return a.empty() ? 0 : a.front().size(); }
    std::int64_t max_abs_coord() const;
};

using MinInnProdSolver = std::function<bool(const InnerProductInstance&)>;

// True iff some pair (i, j) has <a_i, b_j> <= r. Theta(n^2 d).
bool mininnprod_naive(const InnerProductInstance& inst);

// For each j, min_i <a_i, b_j>.
std::vector<ExtValue> allinnprod_naive(const InnerProductInstance& inst);

// MinInnProd -> LowRankLWS: the (2n+1)-item, (d+2)-dimensional sentinel
// construction whose table ends at T[2n+1] = min_{i,j} <a_i, b_j>.
struct MinInnProdToLowRank {
    LowRankInstance target;
    std::int64_t threshold;

    ExtValue min_inner_product(const DpTable& t) const { return t.back(); }
    bool extract(const DpTable& t) const {
        return t.back() <= ExtValue::finite(threshold);
    }
};
MinInnProdToLowRank reduce_mininnprod_to_lowrank(const InnerProductInstance& inst);

using AllInnProdSolver = std::function<std::vector<ExtValue>(const InnerProductInstance&)>;

// Static-LWS over a low-rank model, answered by one AllInnProd call on
// (d+1)-dimensional augmented vectors (mu_i, T[i]) and (sigma_j, 1).
std::vector<ExtValue> static_lowrank_to_allinnprod(const LowRankInstance& inst,
                                                   const StaticQuery& q,
                                                   const AllInnProdSolver& solver);
StaticBatchSolver make_lowrank_static_solver(const LowRankInstance& inst,
                                             const AllInnProdSolver& solver);

// Witness recovery: index-encoding augmentation plus binary search over the
// threshold. Returns a pair with <a_i, b_j> <= r, or nothing. Among ties the
// decoded witness maximizes (i-1)n + (j-1).
std::optional<std::pair<std::size_t, std::size_t>> mininnprod_witness(
    const InnerProductInstance& inst, const MinInnProdSolver& oracle);

struct AllInnProdStats {
    std::size_t rounds = 0;
    std::size_t max_witness_calls_per_round = 0;
};

// AllInnProd by parallel binary search over per-column feasible ranges with
// sqrt(n)-grouping and witness-find-and-delete. Output equals
// allinnprod_naive; per round at most g^2 + n + O(1) witness searches.
std::vector<ExtValue> allinnprod_via_mininnprod(const InnerProductInstance& inst,
                                                const MinInnProdSolver& oracle,
                                                AllInnProdStats* stats = nullptr);

}  // namespace lws

#endif
