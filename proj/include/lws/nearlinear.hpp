#ifndef LWS_NEARLINEAR_HPP
#define LWS_NEARLINEAR_HPP

#include <functional>
#include <vector>

#include "lws/core.hpp"

namespace lws {

struct LisInstance {
    std::vector<std::int64_t> values;    // x_1..x_n
};

struct SubsetSumInstance {
    std::size_t n = 0;
    std::vector<std::size_t> members;    // S, a subset of [n]
};

// Weights queried through an oracle and required to satisfy the quadrangle
// inequality w_{i,j} + w_{i',j'} <= w_{i',j} + w_{i,j'} for i <= i' <= j <= j'.
struct ConcaveInstance {
    std::size_t n = 0;
    std::function<std::int64_t(std::size_t, std::size_t)> weight;
};

struct MonotoneMatrixView {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::function<ExtValue(std::size_t, std::size_t)> entry;
};

// Strict LIS length via the divide-and-conquer driver with a sort-and-merge
// static solver; O(n log^2 n) element touches.
std::size_t lis_length(const LisInstance& inst);

// The full near-linear LWS route exposed for the harness: the extended table
// with the two value sentinels; lis_length(x) = -T[n+1] - 1.
DpTable lis_table_nearlinear(const LisInstance& inst);
// Quadratic reference: solve_naive over the same model.
DpTable lis_table_quadratic(const LisInstance& inst);
ExtValue lis_weight_model_answer(const DpTable& t);

// True iff some multiset over S sums to exactly n; each static query is one
// boolean convolution.
bool unbounded_subset_sum(const SubsetSumInstance& inst);
DpTable uss_table_nearlinear(const SubsetSumInstance& inst);
DpTable uss_table_quadratic(const SubsetSumInstance& inst);

// Column minima of a totally monotone matrix; ties resolve to the smallest
// row index. O(rows + cols) entry evaluations up to a constant.
std::vector<std::size_t> smawk_col_minima(const MonotoneMatrixView& m);

// solve_via_static where each batch builds the N x N view T[i] + w_{i,j} and
// answers it with one SMAWK pass.
DpTable concave_lws(const ConcaveInstance& inst);

// Quadrangle inequality check over adjacent quadruples (i, i+1, j, j+1),
// which implies the general inequality by composition. The exhaustive
// O(n^4) mode validates the shortcut on small instances.
bool check_quadrangle(const ConcaveInstance& inst);
bool check_quadrangle_exhaustive(const ConcaveInstance& inst);

// Brute-force check of the total monotonicity definition.
bool check_total_monotonicity(const MonotoneMatrixView& m);

}  // namespace lws

#endif
