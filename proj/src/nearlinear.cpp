#include "lws/nearlinear.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "lws/counters.hpp"
#include "lws/minplus.hpp"

namespace lws {

namespace {

// LIS as an LWS instance: value sentinels below and above the input, edge
// weight -1 on strict increase. lis_length = -T[n+1] - 1 (the closing edge
// into the top sentinel also scores -1).
class LisModel : public WeightModel {
public:
    explicit LisModel(const std::vector<std::int64_t>& values)
        : WeightModel(values.size() + 1), values_(values) {
        auto [lo, hi] = std::minmax_element(values.begin(), values.end());
        bottom_ = *lo - 1;
        top_ = *hi + 1;
    }

    std::int64_t item(std::size_t k) const {
        if (k == 0) return bottom_;
        if (k == size()) return top_;
        return values_[k - 1];
    }

protected:
    ExtValue query_impl(std::size_t i, std::size_t j) const override {
        return item(i) < item(j) ? ExtValue::finite(-1) : ExtValue::pos_inf();
    }

private:
    const std::vector<std::int64_t>& values_;
    std::int64_t bottom_ = 0;
    std::int64_t top_ = 0;
};

StaticBatchSolver make_lis_static_solver(const LisModel& model) {
    return [&model](const StaticQuery& q) {
        const std::size_t N = q.width;
        counters().weight_queries += 2 * N;    // element touches of the merged pass

        std::vector<std::size_t> ai(N), bj(N);
        std::iota(ai.begin(), ai.end(), 0);
        std::iota(bj.begin(), bj.end(), 0);
        std::sort(ai.begin(), ai.end(), [&](std::size_t x, std::size_t y) {
            return model.item(q.first_i() + x) < model.item(q.first_i() + y);
        });
        std::sort(bj.begin(), bj.end(), [&](std::size_t x, std::size_t y) {
            return model.item(q.first_j() + x) < model.item(q.first_j() + y);
        });

        std::vector<ExtValue> out(N, ExtValue::pos_inf());
        ExtValue run_min = ExtValue::pos_inf();
        std::size_t p = 0;
        for (std::size_t t = 0; t < N; ++t) {
            const std::int64_t bval = model.item(q.first_j() + bj[t]);
            while (p < N && model.item(q.first_i() + ai[p]) < bval) {
                run_min = min(run_min, q.t_in[ai[p]]);
                ++p;
            }
            if (!run_min.is_pos_inf()) out[bj[t]] = run_min + ExtValue::finite(-1);
        }
        return out;
    };
}

}  // namespace

DpTable lis_table_nearlinear(const LisInstance& inst) {
    assert(!inst.values.empty());
    const LisModel model(inst.values);
    return solve_via_static(model, make_lis_static_solver(model));
}

DpTable lis_table_quadratic(const LisInstance& inst) {
    assert(!inst.values.empty());
    const LisModel model(inst.values);
    return solve_naive(model);
}

ExtValue lis_weight_model_answer(const DpTable& t) { return t.back(); }

std::size_t lis_length(const LisInstance& inst) {
    const DpTable t = lis_table_nearlinear(inst);
    return std::size_t(-t.back().value()) - 1;
}

namespace {

class UssModel : public WeightModel {
public:
    explicit UssModel(const SubsetSumInstance& inst) : WeightModel(inst.n), member_(inst.n + 1, 0) {
        for (std::size_t s : inst.members) {
            assert(s >= 1 && s <= inst.n);
            member_[s] = 1;
        }
    }

    bool member(std::size_t k) const { return k <= size() && member_[k]; }

protected:
    ExtValue query_impl(std::size_t i, std::size_t j) const override {
        return member_[j - i] ? ExtValue::finite(0) : ExtValue::pos_inf();
    }

private:
    std::vector<std::uint8_t> member_;
};

StaticBatchSolver make_uss_static_solver(const UssModel& model) {
    return [&model](const StaticQuery& q) {
        const std::size_t N = q.width;
        BitVector x(N), s(2 * N);
        for (std::size_t i = 0; i < N; ++i) x[i] = q.t_in[i].is_finite() ? 1 : 0;
        for (std::size_t k = 1; k <= 2 * N; ++k) s[k - 1] = model.member(k) ? 1 : 0;

        const std::vector<std::int64_t> r = conv_boolean(x, s);
        counters().conv_cells += r.size();

        std::vector<ExtValue> out(N, ExtValue::pos_inf());
        for (std::size_t k = 1; k <= N; ++k)
            if (r[N + k - 2] > 0) out[k - 1] = ExtValue::finite(0);
        return out;
    };
}

}  // namespace

DpTable uss_table_nearlinear(const SubsetSumInstance& inst) {
    assert(inst.n >= 1);
    const UssModel model(inst);
    return solve_via_static(model, make_uss_static_solver(model));
}

DpTable uss_table_quadratic(const SubsetSumInstance& inst) {
    assert(inst.n >= 1);
    const UssModel model(inst);
    return solve_naive(model);
}

bool unbounded_subset_sum(const SubsetSumInstance& inst) {
    return uss_table_nearlinear(inst).back() == ExtValue::finite(0);
}

namespace {

void smawk_rec(const MonotoneMatrixView& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols, std::vector<std::size_t>& out) {
    if (cols.empty()) return;

    // REDUCE: survivors of the stack discipline; at most |cols| rows stay
    std::vector<std::size_t> live;
    live.reserve(std::min(rows.size(), cols.size()));
    for (std::size_t r : rows) {
        while (!live.empty()) {
            const std::size_t c = cols[live.size() - 1];
            if (m.entry(live.back(), c) > m.entry(r, c))
                live.pop_back();
            else
                break;
        }
        if (live.size() < cols.size()) live.push_back(r);
    }

    std::vector<std::size_t> odd;
    for (std::size_t t = 1; t < cols.size(); t += 2) odd.push_back(cols[t]);
    smawk_rec(m, live, odd, out);

    // INTERPOLATE even columns between the argmins of their odd neighbours
    std::size_t p = 0;
    for (std::size_t t = 0; t < cols.size(); t += 2) {
        const std::size_t c = cols[t];
        const std::size_t hi_row = t + 1 < cols.size() ? out[cols[t + 1]] : live.back();
        std::size_t arg = live[p];
        ExtValue best = m.entry(live[p], c);
        while (live[p] != hi_row) {
            ++p;
            const ExtValue v = m.entry(live[p], c);
            if (v < best) {
                best = v;
                arg = live[p];
            }
        }
        out[c] = arg;
    }
}

}  // namespace

std::vector<std::size_t> smawk_col_minima(const MonotoneMatrixView& m) {
    assert(m.rows >= 1 && m.cols >= 1);
    std::vector<std::size_t> rows(m.rows), cols(m.cols);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<std::size_t> out(m.cols, 0);
    smawk_rec(m, rows, cols, out);
    return out;
}

DpTable concave_lws(const ConcaveInstance& inst) {
    assert(inst.n >= 1);
    const FunctionModel model(inst.n, [&inst](std::size_t i, std::size_t j) {
        return ExtValue::finite(inst.weight(i, j));
    });

    const StaticBatchSolver solver = [&model](const StaticQuery& q) {
        MonotoneMatrixView view;
        view.rows = q.width;
        view.cols = q.width;
        view.entry = [&model, &q](std::size_t r, std::size_t c) {
            return q.t_in[r] + model.query(q.first_i() + r, q.first_j() + c);
        };
        const std::vector<std::size_t> arg = smawk_col_minima(view);
        std::vector<ExtValue> out(q.width);
        for (std::size_t c = 0; c < q.width; ++c) out[c] = view.entry(arg[c], c);
        return out;
    };
    return solve_via_static(model, solver);
}

bool check_quadrangle(const ConcaveInstance& inst) {
    // adjacent quadruples (i, i+1, j, j+1) imply the general inequality
    for (std::size_t i = 0; i + 2 <= inst.n; ++i) {
        for (std::size_t j = i + 2; j + 1 <= inst.n; ++j) {
            const std::int64_t lhs =
                checked_add(inst.weight(i, j), inst.weight(i + 1, j + 1));
            const std::int64_t rhs =
                checked_add(inst.weight(i + 1, j), inst.weight(i, j + 1));
            if (lhs > rhs) return false;
        }
    }
    return true;
}

bool check_quadrangle_exhaustive(const ConcaveInstance& inst) {
    for (std::size_t i = 0; i <= inst.n; ++i)
        for (std::size_t ip = i; ip <= inst.n; ++ip)
            for (std::size_t j = ip + 1; j <= inst.n; ++j)
                for (std::size_t jp = j; jp <= inst.n; ++jp) {
                    if (i >= j) continue;
                    const std::int64_t lhs =
                        checked_add(inst.weight(i, j), inst.weight(ip, jp));
                    const std::int64_t rhs =
                        checked_add(inst.weight(ip, j), inst.weight(i, jp));
                    if (lhs > rhs) return false;
                }
    return true;
}

bool check_total_monotonicity(const MonotoneMatrixView& m) {
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t ip = i + 1; ip < m.rows; ++ip)
            for (std::size_t j = 0; j < m.cols; ++j)
                for (std::size_t jp = j + 1; jp < m.cols; ++jp)
                    if (m.entry(i, j) > m.entry(ip, j) && !(m.entry(i, jp) > m.entry(ip, jp)))
                        return false;
    return true;
}

}  // namespace lws
