#include "lws/coinchange.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "lws/counters.hpp"

namespace lws {

std::int64_t CoinChangeInstance::max_abs_finite() const {
    std::int64_t m = 0;
    for (ExtValue v : w)
        if (v.is_finite()) m = std::max(m, v.value() < 0 ? -v.value() : v.value());
    return m;
}

ExtValue solve_cc(const CoinChangeInstance& inst) {
    assert(inst.n >= 1);
    return solve_oicc(inst).back();
}

DpTable solve_oicc(const CoinChangeInstance& inst) {
    assert(inst.n >= 1 && inst.w.size() == inst.n);
    const ToeplitzModel model(inst.n, inst.w);
    return solve_naive(model);
}

std::vector<ExtValue> static_cc_via_minplus(const CoinChangeInstance& inst, const StaticQuery& q,
                                            const MinPlusKernel& conv) {
    const std::size_t N = q.width;
    assert(q.offset + 2 * N <= inst.n);

    // Finite padding: pad exceeds every achievable |T[i] + w|, so padded
    // cells can never undercut a true candidate; outputs above true_bound
    // are mapped back to +inf. Sized from the actual magnitudes so the
    // solver also answers free-standing queries whose T values are not
    // DP-bounded.
    std::int64_t wmax = inst.max_abs_finite();
    for (ExtValue v : q.t_in)
        if (v.is_finite()) wmax = std::max(wmax, std::abs(v.value()));
    const std::int64_t true_bound = checked_mul(2, wmax);
    const std::int64_t pad = checked_add(checked_mul(2, true_bound), 1);
    const ExtValue padv = ExtValue::finite(pad);
    auto masked = [&](ExtValue v) { return v.is_pos_inf() ? padv : v; };

    CostVector u(2 * N + 1, padv);
    for (std::size_t i = 1; i <= N; ++i) u[i] = masked(q.t_in[i - 1]);
    CostVector v(2 * N + 1, padv);
    for (std::size_t j = 1; j <= 2 * N; ++j) v[j] = masked(inst.w[j - 1]);

    const CostVector prod = conv(u, v);
    counters().conv_cells += prod.size();

    std::vector<ExtValue> out(N);
    for (std::size_t k = 1; k <= N; ++k) {
        const ExtValue c = prod[N + k];
        out[k - 1] =
            (!c.is_finite() || c.value() > true_bound) ? ExtValue::pos_inf() : c;
    }
    return out;
}

StaticBatchSolver make_cc_static_solver(const CoinChangeInstance& inst,
                                        const MinPlusKernel& conv) {
    return [&inst, conv](const StaticQuery& q) { return static_cc_via_minplus(inst, q, conv); };
}

DpTable oicc_fast(const CoinChangeInstance& inst, const MinPlusKernel& conv) {
    const ToeplitzModel model(inst.n, inst.w);
    return solve_via_static(model, make_cc_static_solver(inst, conv));
}

MinPlusToOicc reduce_minplus_to_oicc(const CostVector& a, const CostVector& b) {
    const std::size_t n = a.size();
    assert(n >= 1 && b.size() == n);

    std::int64_t amin = a[0].value(), amax = amin, bmin = b[0].value(), bmax = bmin;
    for (ExtValue v : a) {
        amin = std::min(amin, v.value());
        amax = std::max(amax, v.value());
    }
    for (ExtValue v : b) {
        bmin = std::min(bmin, v.value());
        bmax = std::max(bmax, v.value());
    }
    const std::int64_t w =
        std::max({std::int64_t(0), -amin, amax, -bmin, bmax});
    const std::int64_t m = checked_add(checked_mul(2, w), 1);

    MinPlusToOicc red;
    red.source_len = n;
    red.big_m = m;
    red.shift_a = checked_add(checked_mul(2, m), -amin);    // a + alpha in [2M, 3M)
    red.shift_b = -bmin;                                    // b + beta  in [0, M)
    red.norm_a = shift(a, red.shift_a);
    red.norm_b = shift(b, red.shift_b);

    // w = (4M)^n . reverse(a') . (4M)^n . reverse(b') . (4M)^2n
    const ExtValue fourm = ExtValue::finite(checked_mul(4, m));
    std::vector<ExtValue> word(6 * n, fourm);
    for (std::size_t i = 1; i <= n; ++i) {
        word[n + i - 1] = red.norm_a[n - i];
        word[3 * n + i - 1] = red.norm_b[n - i];
    }
    red.target = CoinChangeInstance{6 * n, std::move(word)};
    return red;
}

CostVector MinPlusToOicc::extract(const DpTable& t) const {
    const std::size_t n = source_len;
    assert(t.size() == 6 * n + 1);
    CostVector out(2 * n - 1, ExtValue::pos_inf());
    const std::int64_t delta = shift_total();
    for (std::size_t k = 0; k + 2 <= 2 * n; ++k) {
        const ExtValue cell = t[table_index_of(k)];
        assert(cell.is_finite());
        out[k] = ExtValue::finite(cell.value() - delta);
    }
    return out;
}

bool MinPlusToOicc::check_range_identities(const DpTable& t) const {
    const std::size_t n = source_len;
    if (t.size() != 6 * n + 1) return false;
    const ExtValue fourm = ExtValue::finite(4 * big_m);
    for (std::size_t i = 1; i <= n; ++i) {
        if (t[i] != fourm) return false;                       // range1
        if (t[n + i] != norm_a[n - i]) return false;           // range2
        if (t[2 * n + i] != fourm) return false;               // range3
        if (t[3 * n + i] != norm_b[n - i]) return false;       // range4
    }
    if (t[4 * n + 1] != fourm) return false;                   // range5 padding cell
    const CostVector conv = minplus_naive(norm_a, norm_b);
    for (std::size_t i = 2; i <= 2 * n; ++i)                   // range5 proper
        if (t[4 * n + i] != conv[2 * n - i]) return false;
    return true;
}

CcToKnapsack cc_to_unbounded_knapsack(const CoinChangeInstance& inst) {
    assert(inst.n >= 1);
    CcToKnapsack red;
    red.n = inst.n;
    red.w_bound = inst.max_abs_finite();
    red.big_m = checked_add(checked_mul(std::int64_t(inst.n), red.w_bound), 1);

    KnapsackInstance target;
    target.n = inst.n;
    target.profits.assign(inst.n, -1);
    for (std::size_t i = 1; i <= inst.n; ++i) {
        if (!inst.w[i - 1].is_finite()) continue;
        target.profits[i - 1] =
            checked_add(checked_mul(std::int64_t(i), red.big_m), -inst.w[i - 1].value());
        assert(target.profits[i - 1] >= 0);
    }
    red.target = std::move(target);
    return red;
}

ExtValue CcToKnapsack::extract(std::int64_t best_profit) const {
    // A full-budget multiset of real items has profit >= n*M - n*W; anything
    // below means the budget cannot be filled exactly.
    const std::int64_t nm = checked_mul(std::int64_t(n), big_m);
    const std::int64_t floor_full = nm - checked_mul(std::int64_t(n), w_bound);
    if (best_profit < floor_full) return ExtValue::pos_inf();
    return ExtValue::finite(nm - best_profit);
}

std::int64_t solve_unbounded_knapsack(const KnapsackInstance& inst) {
    assert(inst.n >= 1 && inst.profits.size() == inst.n);
    CoinChangeInstance cc;
    cc.n = inst.n;
    cc.w.assign(inst.n, ExtValue::pos_inf());
    for (std::size_t i = 0; i < inst.n; ++i) {
        if (inst.profits[i] < 0) continue;
        cc.w[i] = ExtValue::finite(-inst.profits[i]);
    }
    const DpTable t = solve_oicc(cc);
    std::int64_t best = 0;    // empty multiset
    for (std::size_t j = 1; j <= inst.n; ++j)
        if (t[j].is_finite()) best = std::max(best, -t[j].value());
    return best;
}

std::optional<std::size_t> threshold_query(const ThresholdQuery& q, const CcSolver& cc_oracle) {
    const std::size_t m = q.coin_weights.size();
    assert(m >= 1 && q.thresholds.size() == m);

    // Effective finite thresholds: -inf removes the return coin entirely;
    // +inf is clamped to an upper bound on any finite T value so the index
    // qualifies whenever it is reachable at all.
    std::int64_t wmax = 1;
    for (ExtValue v : q.coin_weights)
        if (v.is_finite()) wmax = std::max(wmax, std::abs(v.value()));
    const std::int64_t reach_bound = checked_mul(std::int64_t(m), wmax);

    std::vector<std::optional<std::int64_t>> eff(m);
    std::int64_t rmax = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const ExtValue r = q.thresholds[i];
        if (r.is_neg_inf()) continue;
        eff[i] = r.is_pos_inf() ? reach_bound : r.value();
        rmax = std::max(rmax, std::abs(*eff[i]));
    }

    const std::int64_t wbar = std::max(wmax, rmax);
    const std::int64_t sentinel = checked_mul(checked_mul(3, std::int64_t(m) + 1), wbar);
    const std::int64_t scale = std::int64_t(m);

    // Gadget of size 2m+1: scaled w~ coins at denominations 1..m, one scaled
    // return coin per index i at denomination 2m+1-i carrying the witness
    // encoding -(i-1), denomination 2m+1 absent. Exactly one return coin fits
    // in any path to the target, so
    //   T[2m+1] = min_i scale*(T~[i] - r~_i - sentinel) - (i-1).
    CoinChangeInstance gadget;
    gadget.n = 2 * m + 1;
    gadget.w.assign(2 * m + 1, ExtValue::pos_inf());
    for (std::size_t i = 1; i <= m; ++i) {
        const ExtValue wi = q.coin_weights[i - 1];
        if (wi.is_finite())
            gadget.w[i - 1] = ExtValue::finite(checked_mul(scale, wi.value()));
        if (eff[i - 1]) {
            const std::int64_t ret =
                checked_add(checked_mul(scale, checked_add(-sentinel, -*eff[i - 1])),
                            -std::int64_t(i - 1));
            gadget.w[2 * m + 1 - i - 1] = ExtValue::finite(ret);
        }
    }

    ++counters().oracle_calls;
    const ExtValue result = cc_oracle(gadget);
    const std::int64_t cutoff = -checked_mul(scale, sentinel);
    if (!result.is_finite() || result.value() > cutoff) return std::nullopt;
    const std::int64_t idx = (-result.value()) % scale;
    return std::size_t(idx) + 1;
}

namespace {

struct FeasibleRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool resolved = false;
    ExtValue value = ExtValue::pos_inf();
};

}  // namespace

DpTable oicc_via_cc(const CoinChangeInstance& inst, const CcSolver& cc_oracle,
                    OiccViaCcStats* stats) {
    const std::size_t n = inst.n;
    assert(n >= 1 && inst.w.size() == n);
    if (stats) *stats = OiccViaCcStats{};

    const std::int64_t wmax = std::max<std::int64_t>(1, inst.max_abs_finite());
    const std::int64_t table_bound = checked_mul(std::int64_t(n), wmax);
    const std::int64_t big_f = checked_add(checked_mul(2, table_bound), 1);

    DpTable t(n + 1, ExtValue::pos_inf());
    t[0] = ExtValue::finite(0);

    const std::size_t N = std::size_t(std::ceil(std::sqrt(double(n))));

    // ranges W_1, W_2: direct recurrence
    for (std::size_t i = 1; i <= std::min(2 * N, n); ++i) {
        ExtValue best = ExtValue::pos_inf();
        for (std::size_t c = 1; c <= i; ++c) {
            if (!inst.w[c - 1].is_finite() || !t[i - c].is_finite()) continue;
            best = min(best, t[i - c] + inst.w[c - 1]);
        }
        t[i] = best;
    }

    const std::size_t num_ranges = (n + N - 1) / N;
    const std::size_t nn2 = 2 * N;    // subproblem vectors have length 2N

    // masked views into coins and the computed prefix of the table
    auto coin_at = [&](std::size_t denom) {
        if (denom < 1 || denom > n || !inst.w[denom - 1].is_finite())
            return ExtValue::finite(big_f);
        return inst.w[denom - 1];
    };
    auto table_at = [&](std::ptrdiff_t p) {
        if (p < 0 || std::size_t(p) > n || !t[std::size_t(p)].is_finite())
            return ExtValue::finite(big_f);
        return t[std::size_t(p)];
    };

    for (std::size_t j = 3; j <= num_ranges; ++j) {
        const std::size_t i_lo = (j - 1) * N + 1;
        const std::size_t i_hi = std::min(j * N, n);

        std::vector<FeasibleRange> ranges(i_hi - i_lo + 1);
        for (auto& r : ranges) {
            r.lo = -table_bound;
            r.hi = table_bound;
        }
        auto range_of = [&](std::size_t i) -> FeasibleRange& { return ranges[i - i_lo]; };

        auto any_open = [&]() {
            for (const auto& r : ranges)
                if (!r.resolved && r.lo <= r.hi) return true;
            return false;
        };

        while (any_open()) {
            std::size_t probes_this_round = 0;
            std::vector<std::int64_t> median(ranges.size(), 0);
            std::vector<char> witnessed(ranges.size(), 0);
            for (std::size_t idx = 0; idx < ranges.size(); ++idx)
                if (!ranges[idx].resolved && ranges[idx].lo <= ranges[idx].hi)
                    median[idx] = floor_div(ranges[idx].lo + ranges[idx].hi, 2);

            for (std::size_t k = 1; k <= j; ++k) {
                // the two-range subproblem: coins of W_k against the table on
                // W_{j-k} u W_{j-k+1}; k = 1 pairs table against table instead
                CostVector a(nn2), b(nn2);
                if (k == 1) {
                    for (std::size_t l = 1; l <= nn2; ++l) a[l - 1] = table_at(std::ptrdiff_t(l));
                    for (std::size_t l = 1; l <= nn2; ++l)
                        b[l - 1] = l <= N ? table_at(std::ptrdiff_t((j - 2) * N + l))
                                          : ExtValue::finite(big_f);
                } else {
                    const std::ptrdiff_t base =
                        (std::ptrdiff_t(j) - std::ptrdiff_t(k) - 1) * std::ptrdiff_t(N);
                    for (std::size_t l = 1; l <= nn2; ++l)
                        a[l - 1] = l <= N ? coin_at((k - 1) * N + l) : ExtValue::finite(big_f);
                    for (std::size_t l = 1; l <= nn2; ++l)
                        b[l - 1] = table_at(base + std::ptrdiff_t(l));
                }

                const MinPlusToOicc gadget = reduce_minplus_to_oicc(a, b);
                const std::int64_t delta = gadget.shift_total();

                // threshold vector over the gadget table: position of
                // (a*b)_{N+l-2} answers target index (j-1)N + l
                ThresholdQuery probe;
                probe.coin_weights = gadget.target.w;
                probe.thresholds.assign(gadget.target.n, ExtValue::neg_inf());
                auto gadget_pos = [&](std::size_t l) {
                    return gadget.table_index_of(N + l - 2);    // 1-based table index
                };
                bool any = false;
                for (std::size_t i = i_lo; i <= i_hi; ++i) {
                    const std::size_t idx = i - i_lo;
                    if (ranges[idx].resolved || ranges[idx].lo > ranges[idx].hi ||
                        witnessed[idx])
                        continue;
                    const std::size_t l = i - (j - 1) * N;
                    probe.thresholds[gadget_pos(l) - 1] =
                        ExtValue::finite(checked_add(median[idx], delta));
                    any = true;
                }
                if (!any) continue;

                while (true) {
                    ++probes_this_round;
                    if (stats) ++stats->probes;
                    const auto wit = threshold_query(probe, cc_oracle);
                    if (!wit) break;
                    // map gadget index back: g = 6*(2N) - (N + l - 2)
                    const std::size_t g = *wit;
                    assert(g <= 6 * nn2 && 6 * nn2 - g + 2 >= N + 1);
                    const std::size_t l = 6 * nn2 - g + 2 - N;
                    assert(l >= 1 && l <= N);
                    const std::size_t i = (j - 1) * N + l;
                    const std::size_t idx = i - i_lo;
                    assert(!witnessed[idx]);
                    witnessed[idx] = 1;
                    probe.thresholds[g - 1] = ExtValue::neg_inf();
                }
            }

            for (std::size_t idx = 0; idx < ranges.size(); ++idx) {
                auto& r = ranges[idx];
                if (r.resolved || r.lo > r.hi) continue;
                if (witnessed[idx]) {
                    if (r.lo == r.hi) {
                        r.resolved = true;
                        r.value = ExtValue::finite(r.lo);
                    } else {
                        r.hi = median[idx];
                    }
                } else {
                    r.lo = median[idx] + 1;    // empties the range when T[i] = inf
                }
            }
            if (stats) {
                ++stats->rounds;
                stats->max_probes_per_round_per_j =
                    std::max(stats->max_probes_per_round_per_j, probes_this_round);
            }
        }

        for (std::size_t i = i_lo; i <= i_hi; ++i) {
            const auto& r = range_of(i);
            t[i] = r.resolved ? r.value : ExtValue::pos_inf();
        }
    }
    return t;
}

}  // namespace lws
