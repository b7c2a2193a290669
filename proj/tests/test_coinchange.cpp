#include <cmath>

#include "doctest.h"
#include "lws/coinchange.hpp"
#include "lws/harness.hpp"
#include "oracles.hpp"

using lws::CoinChangeInstance;
using lws::CostVector;
using lws::ExtValue;

namespace {

ExtValue fin(std::int64_t v) { return ExtValue::finite(v); }
const ExtValue inf = ExtValue::pos_inf();

CoinChangeInstance cc_of(std::vector<ExtValue> w) {
    CoinChangeInstance inst;
    inst.n = w.size();
    inst.w = std::move(w);
    return inst;
}

CoinChangeInstance random_cc(lws::Rng& rng, std::size_t n, std::int64_t w, unsigned inf_pct) {
    return cc_of(lws_tests::random_cost_vector(rng, n, w, inf_pct));
}

// reconstruct one optimal LWS path by greedy backtracking over the table
std::vector<std::size_t> optimal_denominations(const CoinChangeInstance& inst,
                                               const lws::DpTable& t, std::size_t target) {
    std::vector<std::size_t> denoms;
    std::size_t j = target;
    while (j > 0) {
        bool found = false;
        for (std::size_t i = 0; i < j && !found; ++i) {
            const ExtValue w = inst.w[j - i - 1];
            if (!t[i].is_finite() || !w.is_finite() || !t[j].is_finite()) continue;
            if (t[i].value() + w.value() == t[j].value()) {
                denoms.push_back(j - i);
                j = i;
                found = true;
            }
        }
        REQUIRE(found);
    }
    return denoms;
}

}  // namespace

TEST_CASE("solve_cc hand values") {
    CHECK(lws::solve_cc(cc_of({fin(5)})) == fin(5));
    // multisets of {1,2,4} summing to 4: 2+2 is minimal
    CHECK(lws::solve_cc(cc_of({fin(1), fin(1), inf, fin(10)})) == fin(2));
    // parity: only the 2-coin exists, 3 is odd
    CHECK(lws::solve_cc(cc_of({inf, fin(2), inf})) == inf);
}

TEST_CASE("solve_oicc hand values") {
    CHECK(lws::solve_oicc(cc_of({fin(1), inf, inf, inf})) ==
          lws::DpTable{fin(0), fin(1), fin(2), fin(3), fin(4)});
    CHECK(lws::solve_oicc(cc_of({fin(1), fin(1), inf, fin(10)})) ==
          lws::DpTable{fin(0), fin(1), fin(1), fin(2), fin(2)});
    CHECK(lws::solve_oicc(cc_of({inf, inf})) == lws::DpTable{fin(0), inf, inf});
}

TEST_CASE("static_cc_via_minplus") {
    SUBCASE("oracle equivalence on random queries") {
        lws::Rng rng(401);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = std::size_t(rng.uniform(2, 128));
            const auto inst = random_cc(rng, n, 40, 25);
            const lws::ToeplitzModel model = inst.model();

            const std::size_t N = std::size_t(rng.uniform(1, std::int64_t(n / 2)));
            const std::size_t a = std::size_t(rng.uniform(0, std::int64_t(n - 2 * N)));
            std::vector<ExtValue> t_in(N);
            for (auto& v : t_in)
                v = rng.chance(1, 5) ? inf : fin(rng.uniform(-200, 200));
            const lws::StaticQuery q{a, N, t_in};

            CHECK(lws::static_cc_via_minplus(inst, q, lws::minplus_naive) ==
                  lws::solve_static_naive(model, q));
        }
    }
    SUBCASE("window minimum with zero T and linear coins") {
        // w_k = k, all T = 0: T'[a+N+k] = min_i w_{N+k-i} = k, attained at i = N
        const std::size_t n = 12, N = 4;
        std::vector<ExtValue> w;
        for (std::size_t k = 1; k <= n; ++k) w.push_back(fin(std::int64_t(k)));
        const auto inst = cc_of(std::move(w));
        const std::vector<ExtValue> t_in(N, fin(0));
        const lws::StaticQuery q{0, N, t_in};
        CHECK(lws::static_cc_via_minplus(inst, q, lws::minplus_naive) ==
              std::vector<ExtValue>{fin(1), fin(2), fin(3), fin(4)});
    }
    SUBCASE("N = 1 single addition") {
        const auto inst = cc_of({fin(3), fin(9)});
        const std::vector<ExtValue> t_in{fin(4)};
        const lws::StaticQuery q{0, 1, t_in};
        CHECK(lws::static_cc_via_minplus(inst, q, lws::minplus_naive) ==
              std::vector<ExtValue>{fin(7)});
    }
}

TEST_CASE("oicc_fast equals solve_oicc") {
    lws::Rng rng(402);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = std::size_t(rng.uniform(1, 256));
        const auto inst = random_cc(rng, n, 50, 20);
        CHECK(lws::oicc_fast(inst, lws::minplus_naive) == lws::solve_oicc(inst));
    }
    CHECK(lws::oicc_fast(cc_of({fin(1), inf, inf}), lws::minplus_naive) ==
          lws::DpTable{fin(0), fin(1), fin(2), fin(3)});
    // only the n-coin exists
    CHECK(lws::oicc_fast(cc_of({inf, inf, fin(4)}), lws::minplus_naive) ==
          lws::DpTable{fin(0), inf, inf, fin(4)});
}

TEST_CASE("reduce_minplus_to_oicc") {
    lws::Rng rng(403);
    SUBCASE("extraction equals minplus_naive; ranges hold") {
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = std::size_t(rng.uniform(1, 48));
            const auto a = lws_tests::random_cost_vector(rng, n, 20, 0);
            const auto b = lws_tests::random_cost_vector(rng, n, 20, 0);
            const auto red = lws::reduce_minplus_to_oicc(a, b);
            const auto table = lws::solve_oicc(red.target);
            CHECK(red.check_range_identities(table));
            CHECK(red.extract(table) == lws::minplus_naive(a, b));
        }
    }
    SUBCASE("n = 1 single product") {
        const auto red = lws::reduce_minplus_to_oicc({fin(4)}, {fin(-7)});
        const auto table = lws::solve_oicc(red.target);
        CHECK(red.extract(table) == CostVector{fin(-3)});
    }
    SUBCASE("optimal paths in the gadget use each denomination at most once") {
        for (int t = 0; t < 10; ++t) {
            const std::size_t n = std::size_t(rng.uniform(1, 12));
            const auto a = lws_tests::random_cost_vector(rng, n, 9, 0);
            const auto b = lws_tests::random_cost_vector(rng, n, 9, 0);
            const auto red = lws::reduce_minplus_to_oicc(a, b);
            const auto table = lws::solve_oicc(red.target);
            for (std::size_t i = 1; i <= red.target.n; ++i) {
                if (!table[i].is_finite()) continue;
                auto denoms = optimal_denominations(red.target, table, i);
                std::sort(denoms.begin(), denoms.end());
                CHECK(std::adjacent_find(denoms.begin(), denoms.end()) == denoms.end());
            }
        }
    }
}

TEST_CASE("unbounded knapsack") {
    SUBCASE("hand values") {
        CHECK(lws::solve_unbounded_knapsack({4, {0, 0, 0, 0}}) == 0);
        // two items of size 2 (profit 3 each)
        CHECK(lws::solve_unbounded_knapsack({4, {1, 3, 0, 0}}) == 6);
        CHECK(lws::solve_unbounded_knapsack({1, {7}}) == 7);
    }
    SUBCASE("production route equals the direct DP") {
        lws::Rng rng(404);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = std::size_t(rng.uniform(1, 128));
            lws::KnapsackInstance inst;
            inst.n = n;
            for (std::size_t i = 0; i < n; ++i)
                inst.profits.push_back(rng.chance(1, 5) ? -1 : rng.uniform(0, 30));
            CHECK(lws::solve_unbounded_knapsack(inst) == lws_tests::knapsack_dp(n, inst.profits));
        }
    }
}

TEST_CASE("cc_to_unbounded_knapsack") {
    SUBCASE("hand values") {
        // w = (0, inf, ...): p_1 = M, optimum n*M, T[n] = 0
        const auto inst = cc_of({fin(0), inf, inf});
        const auto red = lws::cc_to_unbounded_knapsack(inst);
        CHECK(red.target.profits[0] == red.big_m);
        CHECK(red.extract(lws_tests::knapsack_dp(red.target.n, red.target.profits)) == fin(0));
        // all absent: extraction infinite
        const auto red2 = lws::cc_to_unbounded_knapsack(cc_of({inf, inf}));
        CHECK(red2.extract(lws_tests::knapsack_dp(red2.target.n, red2.target.profits)) == inf);
    }
    SUBCASE("extraction equals solve_cc on random instances") {
        lws::Rng rng(405);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = std::size_t(rng.uniform(1, 128));
            const auto inst = random_cc(rng, n, 25, 25);
            const auto red = lws::cc_to_unbounded_knapsack(inst);
            CHECK(red.extract(lws_tests::knapsack_dp(red.target.n, red.target.profits)) ==
                  lws::solve_cc(inst));
        }
    }
}

TEST_CASE("threshold_query") {
    SUBCASE("hand values") {
        // M = 1: T[1] = 0 <= 0
        CHECK(lws::threshold_query({{fin(0)}, {fin(0)}}, lws::solve_cc) == 1);
        // all thresholds -inf: nothing qualifies
        CHECK(!lws::threshold_query({{fin(0), fin(1)},
                                     {ExtValue::neg_inf(), ExtValue::neg_inf()}},
                                    lws::solve_cc)
                   .has_value());
    }
    SUBCASE("agreement with brute force on random queries") {
        lws::Rng rng(406);
        for (int t = 0; t < 200; ++t) {
            const std::size_t m = std::size_t(rng.uniform(1, 32));
            lws::ThresholdQuery q;
            q.coin_weights = lws_tests::random_cost_vector(rng, m, 10, 20);
            for (std::size_t i = 0; i < m; ++i) {
                const std::int64_t pick = rng.uniform(0, 9);
                if (pick == 0)
                    q.thresholds.push_back(ExtValue::neg_inf());
                else if (pick == 1)
                    q.thresholds.push_back(inf);
                else
                    q.thresholds.push_back(fin(rng.uniform(-10, 10)));
            }

            const auto table = lws::solve_oicc(cc_of(q.coin_weights));
            bool expect = false;
            for (std::size_t i = 1; i <= m && !expect; ++i) {
                const ExtValue r = q.thresholds[i - 1];
                if (r.is_neg_inf()) continue;
                if (r.is_pos_inf())
                    expect = table[i].is_finite();
                else
                    expect = table[i].is_finite() && table[i].value() <= r.value();
            }

            const auto wit = lws::threshold_query(q, lws::solve_cc);
            CHECK(wit.has_value() == expect);
            if (wit) {
                const ExtValue r = q.thresholds[*wit - 1];
                REQUIRE(!r.is_neg_inf());
                CHECK(table[*wit].is_finite());
                if (r.is_finite()) CHECK(table[*wit].value() <= r.value());
            }
        }
    }
}

TEST_CASE("oicc_via_cc") {
    lws::Rng rng(407);
    SUBCASE("hand shapes") {
        CHECK(lws::oicc_via_cc(cc_of({fin(1), inf, inf, inf, inf, inf, inf, inf, inf, inf}),
                               lws::solve_cc) ==
              lws::solve_oicc(cc_of({fin(1), inf, inf, inf, inf, inf, inf, inf, inf, inf})));
        const auto all_inf = cc_of(std::vector<ExtValue>(10, inf));
        CHECK(lws::oicc_via_cc(all_inf, lws::solve_cc) == lws::solve_oicc(all_inf));
    }
    SUBCASE("oracle equivalence on random instances") {
        for (int t = 0; t < 15; ++t) {
            const std::size_t n = std::size_t(rng.uniform(1, 40));
            const auto inst = random_cc(rng, n, 8, 25);
            CHECK(lws::oicc_via_cc(inst, lws::solve_cc) == lws::solve_oicc(inst));
        }
    }
    SUBCASE("probe budget is O(N) per round per range") {
        for (int t = 0; t < 6; ++t) {
            const std::size_t n = std::size_t(rng.uniform(20, 60));
            const auto inst = random_cc(rng, n, 8, 25);
            lws::OiccViaCcStats stats;
            (void)lws::oicc_via_cc(inst, lws::solve_cc, &stats);
            const std::size_t N = std::size_t(std::ceil(std::sqrt(double(n))));
            CHECK(stats.max_probes_per_round_per_j <= 3 * N + 2);
        }
    }
}

TEST_CASE("full equivalence cycle: conv -> oicc -> cc oracle -> oicc") {
    lws::Rng rng(408);
    for (int t = 0; t < 8; ++t) {
        const std::size_t n = std::size_t(rng.uniform(1, 10));
        const auto a = lws_tests::random_cost_vector(rng, n, 8, 0);
        const auto b = lws_tests::random_cost_vector(rng, n, 8, 0);
        const auto red = lws::reduce_minplus_to_oicc(a, b);
        const auto table = lws::oicc_via_cc(red.target, lws::solve_cc);
        CHECK(red.extract(table) == lws::minplus_naive(a, b));
    }
}
