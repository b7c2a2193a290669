#include "lws/chains.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lws/counters.hpp"
#include "lws/kernels.hpp"

namespace lws {

namespace {

std::int64_t coord_sum(const Item& v) {
    std::int64_t s = 0;
    for (std::int64_t x : v) s = checked_add(s, x);
    return s;
}

Item componentwise(const std::vector<Item>& items, bool take_max, std::int64_t offset) {
    assert(!items.empty());
    Item out = items.front();
    for (const Item& v : items)
        for (std::size_t c = 0; c < out.size(); ++c)
            out[c] = take_max ? std::max(out[c], v[c]) : std::min(out[c], v[c]);
    for (std::int64_t& x : out) x = checked_add(x, offset);
    return out;
}

// descending key order; ties broken lexicographically for determinism
std::vector<std::size_t> order_by_key_desc(const std::vector<Item>& items,
                                           const std::function<std::int64_t(const Item&)>& key) {
    std::vector<std::size_t> idx(items.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        const std::int64_t kx = key(items[x]);
        const std::int64_t ky = key(items[y]);
        if (kx != ky) return kx > ky;
        return items[x] > items[y];
    });
    return idx;
}

}  // namespace

Relation domination_relation() {
    Relation r;
    r.name = "domination";
    r.holds = [](const Item& a, const Item& b) {
        assert(a.size() == b.size());
        for (std::size_t c = 0; c < a.size(); ++c)
            if (a[c] > b[c]) return false;
        return true;
    };
    r.make_bottom = [](const std::vector<Item>& items) {
        return componentwise(items, false, 0);
    };
    r.make_top = [](const std::vector<Item>& items) { return componentwise(items, true, 1); };
    r.make_second_top = [](const std::vector<Item>& items) {
        return componentwise(items, true, 2);
    };
    r.natural_order = [](const std::vector<Item>& items) {
        return order_by_key_desc(items, coord_sum);
    };
    return r;
}

Relation containment_relation() {
    Relation r = domination_relation();    // subset == domination on 0/1 vectors
    r.name = "containment";
    r.make_bottom = [](const std::vector<Item>& items) {
        return Item(items.front().size(), 0);
    };
    r.make_top = [](const std::vector<Item>& items) {
        return Item(items.front().size(), 1);
    };
    r.make_second_top = r.make_top;    // full universe contains itself
    r.natural_order = [](const std::vector<Item>& items) {
        return order_by_key_desc(items, coord_sum);    // cardinality for 0/1 items
    };
    return r;
}

Relation orthogonality_relation() {
    Relation r;
    r.name = "orthogonality";
    r.holds = [](const Item& a, const Item& b) {
        assert(a.size() == b.size());
        return kernels::scalar::dot(a.data(), b.data(), a.size()) == 0;
    };
    auto zero = [](const std::vector<Item>& items) { return Item(items.front().size(), 0); };
    r.make_bottom = zero;
    r.make_top = zero;
    r.make_second_top = zero;
    // no natural ordering in general: two orthogonal items on the same side
    // would form a forward edge whichever way they are ordered
    r.natural_order = nullptr;
    return r;
}

Relation strictly_less_relation() {
    Relation r;
    r.name = "strictly-less";
    r.holds = [](const Item& a, const Item& b) { return a[0] < b[0]; };
    auto extreme = [](const std::vector<Item>& items, bool take_max, std::int64_t off) {
        std::int64_t e = items.front()[0];
        for (const Item& v : items) e = take_max ? std::max(e, v[0]) : std::min(e, v[0]);
        return Item{checked_add(e, off)};
    };
    r.make_bottom = [extreme](const std::vector<Item>& items) {
        return extreme(items, false, -1);
    };
    r.make_top = [extreme](const std::vector<Item>& items) { return extreme(items, true, 1); };
    r.make_second_top = [extreme](const std::vector<Item>& items) {
        return extreme(items, true, 2);
    };
    r.natural_order = [](const std::vector<Item>& items) {
        return order_by_key_desc(items, [](const Item& v) { return v[0]; });
    };
    return r;
}

SelectionWitness selection_naive(const SelectionInstance& inst) {
    assert(!inst.a.empty() && !inst.b.empty());
    for (std::size_t i = 0; i < inst.a.size(); ++i)
        for (std::size_t j = 0; j < inst.b.size(); ++j)
            if (inst.relation.holds(inst.a[i], inst.b[j])) return std::make_pair(i + 1, j + 1);
    return std::nullopt;
}

ExtValue chain_lws_naive(const ChainInstance& inst) {
    assert(inst.items.size() >= 2);
    const ChainModel model(inst);
    return solve_naive(model).back();
}

std::vector<ExtValue> static_chain_via_selection(const ChainInstance& inst, const StaticQuery& q,
                                                 const SelectionSolver& oracle) {
    const std::size_t N = q.width;
    assert(q.t_in.size() == N);

    // I-side indices sorted by T value (pos_inf last, stable on ties)
    std::vector<std::size_t> sorted(N);
    std::iota(sorted.begin(), sorted.end(), 0);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](std::size_t x, std::size_t y) { return q.t_in[x] < q.t_in[y]; });

    const std::size_t g = std::size_t(std::ceil(std::sqrt(double(N))));
    const std::size_t gs = (N + g - 1) / g;

    std::vector<ExtValue> out(N, ExtValue::pos_inf());
    std::vector<char> assigned(N, 0);

    for (std::size_t k = 0; k < g; ++k) {
        const std::size_t a0 = k * gs;
        const std::size_t a1 = std::min(N, a0 + gs);
        if (a0 >= a1) continue;
        for (std::size_t l = 0; l < g; ++l) {
            const std::size_t b0 = l * gs;
            const std::size_t b1 = std::min(N, b0 + gs);

            std::vector<std::size_t> alive;
            for (std::size_t jj = b0; jj < b1; ++jj)
                if (!assigned[jj]) alive.push_back(jj);

            while (!alive.empty()) {
                SelectionInstance sub;
                sub.relation = inst.relation;
                sub.a.reserve(a1 - a0);
                for (std::size_t t = a0; t < a1; ++t)
                    sub.a.push_back(inst.items[q.first_i() + sorted[t]]);
                sub.b.reserve(alive.size());
                for (std::size_t jj : alive) sub.b.push_back(inst.items[q.first_j() + jj]);

                ++counters().oracle_calls;
                const SelectionWitness wit = oracle(sub);
                if (!wit) break;

                const std::size_t jj = alive[wit->second - 1];
                const std::size_t j_abs = q.first_j() + jj;
                // earlier groups held no related item, so the first related
                // item of this group in sorted order carries the minimal T
                for (std::size_t t = a0; t < a1; ++t) {
                    const std::size_t i_abs = q.first_i() + sorted[t];
                    if (inst.relation.holds(inst.items[i_abs], inst.items[j_abs])) {
                        out[jj] = q.t_in[sorted[t]] + inst.edge_weight(j_abs);
                        break;
                    }
                }
                assigned[jj] = 1;
                alive.erase(alive.begin() + std::ptrdiff_t(wit->second - 1));
            }
        }
    }
    return out;
}

StaticBatchSolver make_chain_static_solver(const ChainInstance& inst,
                                           const SelectionSolver& oracle) {
    return [&inst, oracle](const StaticQuery& q) {
        return static_chain_via_selection(inst, q, oracle);
    };
}

ExtValue chain_lws_fast(const ChainInstance& inst, const SelectionSolver& oracle) {
    const ChainModel model(inst);
    return solve_via_static(model, make_chain_static_solver(inst, oracle)).back();
}

bool selection_via_chain(const SelectionInstance& inst, const ChainSolver& chain_solver) {
    const Relation& rel = inst.relation;
    if (!rel.natural_order || !rel.make_bottom || !rel.make_top || !rel.make_second_top)
        throw std::invalid_argument("selection_via_chain: relation lacks sentinels or order");

    auto dedup_and_order = [&](const std::vector<Item>& side) {
        std::vector<Item> unique;
        std::set<Item> seen;
        for (const Item& v : side)
            if (seen.insert(v).second) unique.push_back(v);
        const std::vector<std::size_t> order = rel.natural_order(unique);
        std::vector<Item> out;
        out.reserve(unique.size());
        for (std::size_t idx : order) out.push_back(unique[idx]);
        // no edge may point forward inside an ordered block
        for (std::size_t x = 0; x < out.size(); ++x)
            for (std::size_t y = x + 1; y < out.size(); ++y)
                if (rel.holds(out[x], out[y]))
                    throw std::invalid_argument(
                        "selection_via_chain: natural order violated within a block");
        return out;
    };

    const std::vector<Item> a_block = dedup_and_order(inst.a);
    const std::vector<Item> b_block = dedup_and_order(inst.b);

    std::vector<Item> all = a_block;
    all.insert(all.end(), b_block.begin(), b_block.end());

    ChainInstance gadget;
    gadget.relation = rel;
    gadget.items.reserve(all.size() + 3);
    gadget.items.push_back(rel.make_bottom(all));
    gadget.items.insert(gadget.items.end(), a_block.begin(), a_block.end());
    gadget.items.insert(gadget.items.end(), b_block.begin(), b_block.end());
    gadget.items.push_back(rel.make_top(all));
    gadget.items.push_back(rel.make_second_top(all));
    gadget.weights.assign(gadget.items.size() - 2, -1);

    // bottom -> a_i -> b_j -> top -> second_top scores -3; without a cross
    // pair at most one item besides top can be collected, scoring -2
    return chain_solver(gadget) == ExtValue::finite(-3);
}

ExtValue longest_nested_boxes(const std::vector<Item>& boxes,
                              const std::vector<std::int64_t>& weights,
                              const ChainSolver& solver) {
    assert(!boxes.empty() && weights.size() == boxes.size());

    std::vector<std::size_t> order(boxes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const std::int64_t sx = coord_sum(boxes[x]);
        const std::int64_t sy = coord_sum(boxes[y]);
        if (sx != sy) return sx < sy;
        return boxes[x] < boxes[y];
    });

    ChainInstance inst;
    inst.relation = domination_relation();
    inst.items.reserve(boxes.size() + 2);
    inst.items.push_back(Item(boxes.front().size(), 0));
    for (std::size_t idx : order) inst.items.push_back(boxes[idx]);
    inst.items.push_back(componentwise(boxes, true, 1));
    inst.weights.reserve(boxes.size());
    for (std::size_t idx : order) inst.weights.push_back(weights[idx]);

    return solver(inst);
}

}  // namespace lws
