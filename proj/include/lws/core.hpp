#ifndef LWS_CORE_HPP
#define LWS_CORE_HPP

#include <functional>
#include <span>
#include <vector>

#include "lws/ext_value.hpp"
#include "lws/weight_model.hpp"

namespace lws {

// T[0..n] with T[0] = 0 and T[j] = min_{0 <= i < j} T[i] + w_{i,j}.
using DpTable = std::vector<ExtValue>;

// One batched static subproblem: given finished values T[a+1..a+N] on
// I = {a+1..a+N}, compute T'[j] = min_{i in I} T[i] + w_{i,j} for all j in
// the adjacent interval J = {a+N+1..a+2N}.
struct StaticQuery {
    std::size_t offset = 0;            // a
    std::size_t width = 0;             // N
    std::span<const ExtValue> t_in;    // T[a+1..a+N], length N

    std::size_t first_i() const { return offset + 1; }
    std::size_t first_j() const { return offset + width + 1; }
};

// A batch solver answers one StaticQuery with the N values T'[j], j in J.
using StaticBatchSolver = std::function<std::vector<ExtValue>(const StaticQuery&)>;

// Direct evaluation of the recurrence; Theta(n^2) weight queries.
DpTable solve_naive(const WeightModel& model);

// Direct double loop over I x J; the oracle every batch solver is tested
// against.
std::vector<ExtValue> solve_static_naive(const WeightModel& model, const StaticQuery& q);

StaticBatchSolver make_naive_static_solver(const WeightModel& model);

// Divide-and-conquer reduction of the sequential problem to static batches.
// Exact: equals solve_naive for every model and solver that answers queries
// exactly. Recursion: split at m = ceil((j-i)/2), solve the left half, answer
// one static query for the mirrored right half, merge with elementwise min,
// recurse right; an odd tail index is finished by a direct linear scan.
DpTable solve_via_static(const WeightModel& model, const StaticBatchSolver& solver);

// True iff t has length n+1, t[0] = 0, and every entry satisfies the
// recurrence; O(n^2) verification.
bool check_table(const WeightModel& model, const DpTable& t);

}  // namespace lws

#endif
