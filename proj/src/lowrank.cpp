#include "lws/lowrank.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "lws/counters.hpp"
#include "lws/kernels.hpp"

namespace lws {

namespace {

std::int64_t max_abs_items(const std::vector<Item>& items) {
    std::int64_t m = 0;
    for (const Item& v : items)
        for (std::int64_t x : v) m = std::max(m, x < 0 ? -x : x);
    return m;
}

// Dot products run on the vector backend when the operands fit 32 bits and
// the full sum provably fits; otherwise the checked scalar path.
bool dot_guard(std::int64_t max_a, std::int64_t max_b, std::size_t d) {
    if (max_a > kernels::kDotOperandGuard || max_b > kernels::kDotOperandGuard) return false;
    if (d == 0) return true;
    const std::int64_t limit = std::int64_t(1) << 62;
    if (max_a != 0 && max_b > limit / (max_a * std::int64_t(d))) return false;
    return true;
}

std::int64_t dot_item(const Item& x, const Item& y, bool guarded) {
    assert(x.size() == y.size());
    return kernels::dot(x.data(), y.data(), x.size(), guarded);
}

}  // namespace

std::int64_t LowRankInstance::max_abs_coord() const {
    return std::max(max_abs_items(out_vecs), max_abs_items(in_vecs));
}

std::int64_t InnerProductInstance::max_abs_coord() const {
    return std::max(max_abs_items(a), max_abs_items(b));
}

LowRankModel::LowRankModel(LowRankInstance inst)
    : WeightModel(inst.n), inst_(std::move(inst)) {
    assert(inst_.out_vecs.size() == inst_.n);
    assert(inst_.in_vecs.size() == inst_.n);
    const std::int64_t m = inst_.max_abs_coord();
    dot_guarded_ = dot_guard(m, m, inst_.dim());
}

ExtValue LowRankModel::query_impl(std::size_t i, std::size_t j) const {
    return ExtValue::finite(dot_item(inst_.out_vecs[i], inst_.in_vecs[j - 1], dot_guarded_));
}

bool mininnprod_naive(const InnerProductInstance& inst) {
    assert(!inst.a.empty() && !inst.b.empty());
    const std::int64_t m = inst.max_abs_coord();
    const bool guarded = dot_guard(m, m, inst.dim());
    for (const Item& a : inst.a)
        for (const Item& b : inst.b)
            if (dot_item(a, b, guarded) <= inst.threshold) return true;
    return false;
}

std::vector<ExtValue> allinnprod_naive(const InnerProductInstance& inst) {
    assert(!inst.a.empty() && !inst.b.empty());
    const std::int64_t m = inst.max_abs_coord();
    const bool guarded = dot_guard(m, m, inst.dim());
    std::vector<ExtValue> out;
    out.reserve(inst.b.size());
    for (const Item& b : inst.b) {
        std::int64_t best = dot_item(inst.a.front(), b, guarded);
        for (std::size_t i = 1; i < inst.a.size(); ++i)
            best = std::min(best, dot_item(inst.a[i], b, guarded));
        out.push_back(ExtValue::finite(best));
    }
    return out;
}

MinInnProdToLowRank reduce_mininnprod_to_lowrank(const InnerProductInstance& inst) {
    const std::size_t n = inst.a.size();
    assert(n >= 1 && inst.b.size() == n);
    const std::size_t d = inst.dim();
    const std::int64_t w = std::max<std::int64_t>(1, inst.max_abs_coord());
    const std::int64_t s = checked_mul(std::int64_t(d), w);
    checked_mul(s, s);  // the sentinel product (dW)^2 must be representable

    const Item zeros(d + 2, 0);
    auto out_vec = [&](std::int64_t c0, std::int64_t c1, const Item* payload) {
        Item v(d + 2, 0);
        v[0] = c0;
        v[1] = c1;
        if (payload)
            std::copy(payload->begin(), payload->end(), v.begin() + 2);
        return v;
    };

    LowRankInstance target;
    target.n = 2 * n + 1;
    target.out_vecs.reserve(target.n);
    target.in_vecs.reserve(target.n);

    target.out_vecs.push_back(out_vec(s, 0, nullptr));            // mu_0
    for (std::size_t i = 0; i < n; ++i)                            // mu_1..mu_n
        target.out_vecs.push_back(out_vec(0, s, &inst.a[i]));
    for (std::size_t j = 0; j < n; ++j) {                          // mu_{n+1}..mu_{2n}
        (void)j;
        target.out_vecs.push_back(zeros);
    }

    for (std::size_t i = 0; i < n; ++i)                            // sigma_1..sigma_n
        target.in_vecs.push_back(zeros);
    for (std::size_t j = 0; j < n; ++j)                            // sigma_{n+1}..sigma_{2n}
        target.in_vecs.push_back(out_vec(s, 0, &inst.b[j]));
    target.in_vecs.push_back(out_vec(s, s, nullptr));              // sigma_{2n+1}

    return MinInnProdToLowRank{std::move(target), inst.threshold};
}

std::vector<ExtValue> static_lowrank_to_allinnprod(const LowRankInstance& inst,
                                                   const StaticQuery& q,
                                                   const AllInnProdSolver& solver) {
    assert(q.t_in.size() == q.width);
    InnerProductInstance aug;
    aug.a.reserve(q.width);
    aug.b.reserve(q.width);
    for (std::size_t l = 0; l < q.width; ++l) {
        Item v = inst.out_vecs[q.first_i() + l];
        assert(q.t_in[l].is_finite());
        v.push_back(q.t_in[l].value());    // <(mu_i, T[i]), (sigma_j, 1)> = T[i] + w_{i,j}
        aug.a.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < q.width; ++k) {
        Item v = inst.in_vecs[q.first_j() + k - 1];
        v.push_back(1);
        aug.b.push_back(std::move(v));
    }
    return solver(aug);
}

StaticBatchSolver make_lowrank_static_solver(const LowRankInstance& inst,
                                             const AllInnProdSolver& solver) {
    return [&inst, solver](const StaticQuery& q) {
        return static_lowrank_to_allinnprod(inst, q, solver);
    };
}

std::optional<std::pair<std::size_t, std::size_t>> mininnprod_witness(
    const InnerProductInstance& inst, const MinInnProdSolver& oracle) {
    const std::size_t na = inst.a.size();
    const std::size_t nb = inst.b.size();
    assert(na >= 1 && nb >= 1);
    const std::int64_t nn = std::int64_t(std::max(na, nb));
    const std::int64_t nn2 = checked_mul(nn, nn);

    // a'_i = (a_i n, (i-1)n, -1), b'_j = (b_j n, -1, j-1):
    // <a', b'> = n^2 <a, b> - (i-1)n - (j-1), so equal products resolve to
    // the pair with the largest (i-1)n + (j-1).
    InnerProductInstance aug;
    aug.a.reserve(na);
    aug.b.reserve(nb);
    for (std::size_t i = 0; i < na; ++i) {
        Item v;
        v.reserve(inst.dim() + 2);
        for (std::int64_t x : inst.a[i]) v.push_back(checked_mul(x, nn));
        v.push_back(checked_mul(std::int64_t(i), nn));
        v.push_back(-1);
        aug.a.push_back(std::move(v));
    }
    for (std::size_t j = 0; j < nb; ++j) {
        Item v;
        v.reserve(inst.dim() + 2);
        for (std::int64_t x : inst.b[j]) v.push_back(checked_mul(x, nn));
        v.push_back(-1);
        v.push_back(std::int64_t(j));
        aug.b.push_back(std::move(v));
    }

    const std::int64_t prod_bound =
        checked_mul(checked_mul(std::int64_t(std::max<std::size_t>(inst.dim(), 1)),
                                std::max<std::int64_t>(1, max_abs_items(inst.a))),
                    std::max<std::int64_t>(1, max_abs_items(inst.b)));
    const std::int64_t bound = checked_add(checked_mul(nn2, prod_bound), nn2);
    const std::int64_t qualify = checked_mul(inst.threshold, nn2);

    auto decide = [&](std::int64_t r) {
        aug.threshold = r;
        ++counters().oracle_calls;
        return oracle(aug);
    };

    if (!decide(qualify)) return std::nullopt;

    std::int64_t lo = -bound, hi = qualify;
    while (lo < hi) {
        const std::int64_t mid = floor_div(lo + hi, 2);
        if (decide(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    const std::int64_t vmin = lo;
    const std::int64_t p = floor_div(vmin + nn2 - 1, nn2);
    const std::int64_t e = checked_mul(p, nn2) - vmin;
    assert(e >= 0 && e < nn2);
    return std::make_pair(std::size_t(e / nn) + 1, std::size_t(e % nn) + 1);
}

std::vector<ExtValue> allinnprod_via_mininnprod(const InnerProductInstance& inst,
                                                const MinInnProdSolver& oracle,
                                                AllInnProdStats* stats) {
    const std::size_t n = inst.b.size();
    assert(inst.a.size() == n && n >= 1);
    const std::size_t g = std::size_t(std::ceil(std::sqrt(double(n))));
    const std::size_t group = (n + g - 1) / g;

    const std::int64_t prod_bound =
        checked_mul(checked_mul(std::int64_t(std::max<std::size_t>(inst.dim(), 1)),
                                std::max<std::int64_t>(1, max_abs_items(inst.a))),
                    std::max<std::int64_t>(1, max_abs_items(inst.b)));

    std::vector<std::int64_t> lo(n, -prod_bound), hi(n, prod_bound);
    if (stats) *stats = AllInnProdStats{};

    auto unresolved = [&]() {
        for (std::size_t j = 0; j < n; ++j)
            if (lo[j] < hi[j]) return true;
        return false;
    };

    std::vector<std::int64_t> median(n);
    std::vector<char> witnessed(n);
    while (unresolved()) {
        std::size_t witness_calls = 0;
        for (std::size_t j = 0; j < n; ++j) {
            median[j] = floor_div(lo[j] + hi[j], 2);
            witnessed[j] = 0;
        }
        for (std::size_t k = 0; k < g; ++k) {
            const std::size_t a0 = k * group;
            const std::size_t a1 = std::min(n, a0 + group);
            if (a0 >= a1) continue;
            for (std::size_t l = 0; l < g; ++l) {
                const std::size_t b0 = l * group;
                const std::size_t b1 = std::min(n, b0 + group);

                // alive = unresolved, not yet witnessed this round
                std::vector<std::size_t> alive;
                for (std::size_t j = b0; j < b1; ++j)
                    if (lo[j] < hi[j] && !witnessed[j]) alive.push_back(j);

                while (!alive.empty()) {
                    InnerProductInstance sub;
                    sub.a.reserve(a1 - a0);
                    sub.b.reserve(alive.size());
                    for (std::size_t i = a0; i < a1; ++i) {
                        Item v = inst.a[i];
                        v.push_back(-1);
                        sub.a.push_back(std::move(v));
                    }
                    for (std::size_t j : alive) {
                        Item v = inst.b[j];
                        v.push_back(median[j]);    // <(a,-1),(b,r_j)> <= 0 iff <a,b> <= r_j
                        sub.b.push_back(std::move(v));
                    }
                    sub.threshold = 0;
                    ++witness_calls;
                    const auto wit = mininnprod_witness(sub, oracle);
                    if (!wit) break;
                    const std::size_t j = alive[wit->second - 1];
                    witnessed[j] = 1;
                    alive.erase(alive.begin() + std::ptrdiff_t(wit->second - 1));
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (lo[j] >= hi[j]) continue;
            if (witnessed[j])
                hi[j] = median[j];
            else
                lo[j] = median[j] + 1;
        }
        if (stats) {
            ++stats->rounds;
            stats->max_witness_calls_per_round =
                std::max(stats->max_witness_calls_per_round, witness_calls);
        }
    }

    std::vector<ExtValue> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = ExtValue::finite(lo[j]);
    return out;
}

}  // namespace lws
