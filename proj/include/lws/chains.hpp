#ifndef LWS_CHAINS_HPP
#define LWS_CHAINS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lws/core.hpp"
#include "lws/lowrank.hpp"

namespace lws {

// A binary relation over data items (items are flat int64 vectors; boolean
// set items use 0/1 coordinates). holds() is pure. The sentinel makers and
// the natural order are only needed by the Selection -> ChainLWS gadget:
// bottom relates to everything, everything relates to top, and the natural
// order guarantees that no relation edge points forward inside an ordered
// block. second_top is a top for top itself, for relations where
// holds(top, top) fails.
struct Relation {
    std::string name;
    std::function<bool(const Item&, const Item&)> holds;
    std::function<Item(const std::vector<Item>&)> make_bottom;
    std::function<Item(const std::vector<Item>&)> make_top;
    std::function<Item(const std::vector<Item>&)> make_second_top;
    std::function<std::vector<std::size_t>(const std::vector<Item>&)> natural_order;
};

// a fits into b: a <= b componentwise (non-strict).
Relation domination_relation();
// set containment via 0/1 vectors: a subset of b.
Relation containment_relation();
// <a, b> = 0; no natural order exists, selection_via_chain rejects it.
Relation orthogonality_relation();
// scalar strictly-less over 1-dimensional items.
Relation strictly_less_relation();

// Items x_0..x_n with interior weights w_1..w_{n-1}; the induced LWS edge
// into x_n carries weight 0 so that T[n] sums exactly the interior weights.
//
// The input is a sequence, not a set: chains must respect the given order.
// The set variant (find the best chain over an unordered item set) is
// NP-complete in general -- e.g. with the box-overlap relation it contains
// Hamiltonian path on grid subgraphs -- so no solver for it exists here.
struct ChainInstance {
    std::vector<Item> items;                 // x_0..x_n
    std::vector<std::int64_t> weights;       // w_1..w_{n-1}
    Relation relation;

    std::size_t n() const { return items.size() - 1; }
    ExtValue edge_weight(std::size_t j) const {
        return ExtValue::finite(j == n() ? 0 : weights[j - 1]);
    }
};

class ChainModel : public WeightModel {
public:
    explicit ChainModel(const ChainInstance& inst)
        : WeightModel(inst.n()), inst_(inst) {}

protected:
    ExtValue query_impl(std::size_t i, std::size_t j) const override {
        return inst_.relation.holds(inst_.items[i], inst_.items[j]) ? inst_.edge_weight(j)
                                                                    : ExtValue::pos_inf();
    }

private:
    const ChainInstance& inst_;
};

struct SelectionInstance {
    std::vector<Item> a;
    std::vector<Item> b;
    Relation relation;
};

// 1-based witness pair, or nothing.
using SelectionWitness = std::optional<std::pair<std::size_t, std::size_t>>;
using SelectionSolver = std::function<SelectionWitness(const SelectionInstance&)>;

// Scan in i-major order; returns the lexicographically smallest pair.
SelectionWitness selection_naive(const SelectionInstance& inst);

using ChainSolver = std::function<ExtValue(const ChainInstance&)>;

// T[n] of the induced model via the quadratic reference solver.
ExtValue chain_lws_naive(const ChainInstance& inst);

// Static-ChainLWS answered through a Selection oracle: sort I by T value,
// split both sides into ceil(sqrt(N)) groups, iterate group pairs in
// lexicographic order, and on every oracle hit charge the first (minimum-T)
// related item and delete the witnessed j.
std::vector<ExtValue> static_chain_via_selection(const ChainInstance& inst, const StaticQuery& q,
                                                 const SelectionSolver& oracle);
StaticBatchSolver make_chain_static_solver(const ChainInstance& inst,
                                           const SelectionSolver& oracle);

// solve_via_static over the chain model; equals chain_lws_naive.
ExtValue chain_lws_fast(const ChainInstance& inst, const SelectionSolver& oracle);

// The sentinel gadget: bottom, a-items, b-items, top, second top, every
// interior weight -1; a qualifying cross pair exists iff the chain value is
// exactly -3. Duplicates within each side are removed first, and the ordered
// blocks are verified to carry no forward edge (throws std::invalid_argument
// otherwise).
bool selection_via_chain(const SelectionInstance& inst, const ChainSolver& chain_solver);

// NestedBoxes: sort by coordinate sum (ties lexicographic), wrap in 0-vector
// bottom and (maxcoord+1)-vector top, solve the fits-into ChainLWS. With the
// default unit weights the result is -(longest chain length).
ExtValue longest_nested_boxes(const std::vector<Item>& boxes,
                              const std::vector<std::int64_t>& weights,
                              const ChainSolver& solver);

}  // namespace lws

#endif
