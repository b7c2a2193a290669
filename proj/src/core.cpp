#include "lws/core.hpp"

#include <cassert>

#include "lws/counters.hpp"
#include "lws/kernels.hpp"

namespace lws {

ExplicitModel::ExplicitModel(std::size_t n, std::vector<ExtValue> upper)
    : WeightModel(n), w_(std::move(upper)) {
    assert(w_.size() == entry_count(n));
}

std::size_t ExplicitModel::index(std::size_t i, std::size_t j) const {
    // row i starts after sum_{r<i} (n - r) entries; within the row, j-i-1.
    const std::size_t n = size();
    return i * n - i * (i - 1) / 2 + (j - i - 1);
}

ExtValue ExplicitModel::query_impl(std::size_t i, std::size_t j) const { return w_[index(i, j)]; }

ToeplitzModel::ToeplitzModel(std::size_t n, std::vector<ExtValue> word)
    : WeightModel(n), word_(std::move(word)) {
    assert(word_.size() == n);
}

ExtValue ToeplitzModel::query_impl(std::size_t i, std::size_t j) const { return word_[j - i - 1]; }

DpTable solve_naive(const WeightModel& model) {
    const std::size_t n = model.size();
    DpTable t(n + 1, ExtValue::pos_inf());
    t[0] = ExtValue::finite(0);
    for (std::size_t j = 1; j <= n; ++j) {
        ExtValue best = ExtValue::pos_inf();
        for (std::size_t i = 0; i < j; ++i) {
            const ExtValue w = model.query(i, j);
            if (t[i].is_pos_inf() || w.is_pos_inf()) continue;
            best = min(best, t[i] + w);
        }
        t[j] = best;
    }
    return t;
}

std::vector<ExtValue> solve_static_naive(const WeightModel& model, const StaticQuery& q) {
    assert(q.t_in.size() == q.width);
    assert(q.offset + 2 * q.width <= model.size());
    std::vector<ExtValue> out(q.width, ExtValue::pos_inf());
    for (std::size_t k = 0; k < q.width; ++k) {
        const std::size_t j = q.first_j() + k;
        ExtValue best = ExtValue::pos_inf();
        for (std::size_t l = 0; l < q.width; ++l) {
            const ExtValue ti = q.t_in[l];
            const ExtValue w = model.query(q.first_i() + l, j);
            if (ti.is_pos_inf() || w.is_pos_inf()) continue;
            best = min(best, ti + w);
        }
        out[k] = best;
    }
    return out;
}

StaticBatchSolver make_naive_static_solver(const WeightModel& model) {
    return [&model](const StaticQuery& q) { return solve_static_naive(model, q); };
}

namespace {

// The recursive subproblem: on entry, t[k] = min_{0 <= k' < i} T[k'] + w_{k',k}
// for every k in {i..j} (1-based positions into the full table). On exit,
// table[i..j] hold the final T values.
class StaticDriver {
public:
    StaticDriver(const WeightModel& model, const StaticBatchSolver& solver, DpTable& table)
        : model_(model), solver_(solver), table_(table) {}

    void run(std::size_t i, std::size_t j, std::span<ExtValue> t) {
        assert(t.size() == j - i + 1);
        if (i == j) {
            table_[i] = t[0];
            return;
        }
        const std::size_t m = (j - i + 1) / 2;  // ceil((j - i) / 2)
        run(i, i + m - 1, t.subspan(0, m));

        StaticQuery q{i - 1, m, std::span<const ExtValue>(table_).subspan(i, m)};
        counters().static_cells += m;
        std::vector<ExtValue> batch = solver_(q);
        assert(batch.size() == m);

        auto right = t.subspan(m, m);
        kernels::elementwise_min(reinterpret_cast<std::int64_t*>(right.data()),
                                 reinterpret_cast<const std::int64_t*>(batch.data()), m);
        run(i + m, i + 2 * m - 1, right);

        if (j == i + 2 * m) {
            // odd interval length: one index left of the two halves
            ExtValue best = t[j - i];
            for (std::size_t k = i; k < j; ++k) {
                const ExtValue w = model_.query(k, j);
                if (table_[k].is_pos_inf() || w.is_pos_inf()) continue;
                best = min(best, table_[k] + w);
            }
            table_[j] = best;
        }
    }

private:
    const WeightModel& model_;
    const StaticBatchSolver& solver_;
    DpTable& table_;
};

}  // namespace

DpTable solve_via_static(const WeightModel& model, const StaticBatchSolver& solver) {
    const std::size_t n = model.size();
    DpTable table(n + 1, ExtValue::pos_inf());
    table[0] = ExtValue::finite(0);
    if (n == 0) return table;

    std::vector<ExtValue> t(n);
    for (std::size_t k = 1; k <= n; ++k) t[k - 1] = model.query(0, k);

    StaticDriver driver(model, solver, table);
    driver.run(1, n, t);
    return table;
}

bool check_table(const WeightModel& model, const DpTable& t) {
    const std::size_t n = model.size();
    if (t.size() != n + 1) return false;
    if (t[0] != ExtValue::finite(0)) return false;
    for (std::size_t j = 1; j <= n; ++j) {
        ExtValue best = ExtValue::pos_inf();
        for (std::size_t i = 0; i < j; ++i) {
            const ExtValue w = model.query(i, j);
            if (t[i].is_pos_inf() || w.is_pos_inf()) continue;
            best = min(best, t[i] + w);
        }
        if (t[j] != best) return false;
    }
    return true;
}

}  // namespace lws
