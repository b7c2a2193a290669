#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "lws/harness.hpp"
#include "lws/minplus.hpp"

namespace lws {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
        h ^= (x >> (8 * b)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return std::string(buf);
}

// -------- independent reference solvers for the verify suites --------

std::int64_t knapsack_direct_dp(const KnapsackInstance& inst) {
    // K[b] = max profit with total size <= b
    std::vector<std::int64_t> k(inst.n + 1, 0);
    for (std::size_t b = 1; b <= inst.n; ++b) {
        std::int64_t best = k[b - 1];
        for (std::size_t i = 1; i <= b; ++i) {
            if (inst.profits[i - 1] < 0) continue;
            best = std::max(best, k[b - i] + inst.profits[i - 1]);
        }
        k[b] = best;
    }
    return k[inst.n];
}

std::size_t lis_direct_dp(const std::vector<std::int64_t>& x) {
    std::vector<std::size_t> len(x.size(), 1);
    std::size_t best = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i)
            if (x[i] < x[j]) len[j] = std::max(len[j], len[i] + 1);
        best = std::max(best, len[j]);
    }
    return best;
}

bool uss_direct_dp(const SubsetSumInstance& inst) {
    std::vector<char> reach(inst.n + 1, 0);
    reach[0] = 1;
    for (std::size_t v = 1; v <= inst.n; ++v)
        for (std::size_t s : inst.members)
            if (s <= v && reach[v - s]) {
                reach[v] = 1;
                break;
            }
    return reach[inst.n] != 0;
}

bool tables_equal(const DpTable& a, const DpTable& b) { return a == b; }

DpTable corrupt_table(DpTable t) {
    ExtValue& v = t.back();
    v = v.is_finite() ? ExtValue::finite(v.value() + 1) : ExtValue::finite(0);
    return t;
}

}  // namespace

std::string digest_table(const DpTable& t) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (ExtValue v : t) h = fnv1a(h, std::uint64_t(v.raw()));
    return hex64(h);
}

std::vector<std::string> solvers_for_kind(const std::string& kind) {
    if (kind == "explicit") return {"lws-naive", "lws-static-naive"};
    if (kind == "lowrank") return {"lowrank-naive", "lowrank-fast"};
    if (kind == "toeplitz")
        return {"cc-naive", "oicc-naive", "oicc-fast", "oicc-via-cc", "cc-via-knapsack"};
    if (kind == "knapsack") return {"uknap"};
    if (kind == "chain-boxes" || kind == "chain-sets") return {"chain-naive", "chain-fast"};
    if (kind == "lis") return {"lis-quadratic", "lis-nearlinear"};
    if (kind == "uss") return {"uss-quadratic", "uss-nearlinear"};
    if (kind == "concave-refuel") return {"concave-quadratic", "concave-smawk"};
    throw std::invalid_argument("unknown instance kind: " + kind);
}

RunReport run_solver(const InstanceFile& f, const std::string& solver_id) {
    RunReport rep;
    rep.kind = f.kind;
    rep.solver = solver_id;

    counters().reset();
    const auto t0 = std::chrono::steady_clock::now();

    auto finish_table = [&](const DpTable& t) {
        rep.size = t.size() - 1;
        rep.answer_digest = digest_table(t);
    };
    auto finish_scalar = [&](const std::string& s, std::size_t size) {
        rep.size = size;
        rep.answer_digest = s;
    };

    if (f.kind == "explicit") {
        const auto& e = std::get<ExplicitInstance>(f.payload);
        const ExplicitModel model = e.model();
        if (solver_id == "lws-naive")
            finish_table(solve_naive(model));
        else if (solver_id == "lws-static-naive")
            finish_table(solve_via_static(model, make_naive_static_solver(model)));
        else
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
    } else if (f.kind == "lowrank") {
        const auto& lr = std::get<LowRankInstance>(f.payload);
        const LowRankModel model(lr);
        if (solver_id == "lowrank-naive") {
            finish_table(solve_naive(model));
        } else if (solver_id == "lowrank-fast") {
            const AllInnProdSolver inner = [](const InnerProductInstance& ip) {
                return allinnprod_via_mininnprod(ip, mininnprod_naive);
            };
            finish_table(solve_via_static(model, make_lowrank_static_solver(lr, inner)));
        } else {
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
        }
    } else if (f.kind == "toeplitz") {
        const auto& cc = std::get<CoinChangeInstance>(f.payload);
        if (solver_id == "cc-naive")
            finish_scalar(to_string(solve_cc(cc)), cc.n);
        else if (solver_id == "oicc-naive")
            finish_table(solve_oicc(cc));
        else if (solver_id == "oicc-fast")
            finish_table(oicc_fast(cc, minplus_naive));
        else if (solver_id == "oicc-via-cc")
            finish_table(oicc_via_cc(cc, solve_cc));
        else if (solver_id == "cc-via-knapsack") {
            const CcToKnapsack red = cc_to_unbounded_knapsack(cc);
            finish_scalar(to_string(red.extract(solve_unbounded_knapsack(red.target))), cc.n);
        } else {
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
        }
    } else if (f.kind == "knapsack") {
        const auto& kp = std::get<KnapsackInstance>(f.payload);
        if (solver_id == "uknap")
            finish_scalar(std::to_string(solve_unbounded_knapsack(kp)), kp.n);
        else
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
    } else if (f.kind == "chain-boxes" || f.kind == "chain-sets") {
        const auto& ch = std::get<ChainFileInstance>(f.payload);
        const ChainInstance inst = ch.instance();
        if (solver_id == "chain-naive")
            finish_scalar(to_string(chain_lws_naive(inst)), inst.n());
        else if (solver_id == "chain-fast")
            finish_scalar(to_string(chain_lws_fast(inst, selection_naive)), inst.n());
        else
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
    } else if (f.kind == "lis") {
        const auto& li = std::get<LisInstance>(f.payload);
        if (solver_id == "lis-nearlinear")
            finish_scalar(std::to_string(lis_length(li)), li.values.size());
        else if (solver_id == "lis-quadratic") {
            const DpTable t = lis_table_quadratic(li);
            finish_scalar(std::to_string(std::size_t(-t.back().value()) - 1), li.values.size());
        } else {
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
        }
    } else if (f.kind == "uss") {
        const auto& ss = std::get<SubsetSumInstance>(f.payload);
        if (solver_id == "uss-nearlinear")
            finish_scalar(unbounded_subset_sum(ss) ? "yes" : "no", ss.n);
        else if (solver_id == "uss-quadratic")
            finish_scalar(uss_table_quadratic(ss).back() == ExtValue::finite(0) ? "yes" : "no",
                          ss.n);
        else
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
    } else if (f.kind == "concave-refuel") {
        const auto& cr = std::get<ConcaveRefuelInstance>(f.payload);
        const ConcaveInstance inst = cr.oracle();
        if (solver_id == "concave-smawk") {
            finish_table(concave_lws(inst));
        } else if (solver_id == "concave-quadratic") {
            const FunctionModel model(inst.n, [&inst](std::size_t i, std::size_t j) {
                return ExtValue::finite(inst.weight(i, j));
            });
            finish_table(solve_naive(model));
        } else {
            throw std::invalid_argument("solver incompatible with kind: " + solver_id);
        }
    } else {
        throw std::invalid_argument("unknown instance kind: " + f.kind);
    }

    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_ns = std::uint64_t(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    rep.weight_queries = counters().weight_queries;
    rep.oracle_calls = counters().oracle_calls;
    rep.conv_cells = counters().conv_cells;
    return rep;
}

std::vector<std::string> reduction_ids() {
    return {"lrlws-lb",   "static-lowrank", "all-to-min", "conv-to-oicc",
            "static-cc",  "uknap",          "oicc-via-cc", "chain-to-sel",
            "sel-to-chain", "lis",          "uss",         "concave"};
}

namespace {

struct SuiteSpec {
    std::string gen_kind;
    std::size_t min_n;
    GenParams params;
};

SuiteSpec suite_spec(const std::string& id, std::size_t trial) {
    GenParams ip{8, 4, 0};          // inner-product suites: small W and d
    GenParams conv{20, 3, 0};       // finite entries only
    GenParams cc{8, 3, 150};
    GenParams chain{4, 3, 0};
    GenParams loose{50, 3, 150};

    if (id == "lrlws-lb" || id == "all-to-min") return {"lowrank", 1, ip};
    if (id == "static-lowrank") return {"lowrank", 2, ip};
    if (id == "conv-to-oicc") return {"toeplitz", 2, conv};
    if (id == "static-cc" || id == "oicc-via-cc") return {"toeplitz", 2, cc};
    if (id == "uknap") return {trial % 2 == 0 ? "toeplitz" : "knapsack", 1, cc};
    if (id == "chain-to-sel" || id == "sel-to-chain")
        return {trial % 2 == 0 ? "chain-boxes" : "chain-sets", 3, chain};
    if (id == "lis") return {"lis", 1, GenParams{100, 3, 0}};
    if (id == "uss") return {"uss", 1, loose};
    if (id == "concave") return {"concave-refuel", 1, GenParams{20, 3, 0}};
    throw std::invalid_argument("unknown reduction id: " + id);
}

}  // namespace

VerifyResult verify_replay(const std::string& id, const InstanceFile& f, bool corrupt) {
    VerifyResult res;
    res.trials = 1;

    auto fail = [&](const std::string& detail) {
        res.pass = false;
        res.detail = detail;
        res.counterexample = f;
    };

    if (id == "lrlws-lb") {
        const auto& lr = std::get<LowRankInstance>(f.payload);
        InnerProductInstance ip{lr.out_vecs, lr.in_vecs, 0};
        const auto red = reduce_mininnprod_to_lowrank(ip);
        const LowRankModel model(red.target);
        ExtValue got = red.min_inner_product(solve_naive(model));
        if (corrupt) got = got + ExtValue::finite(1);
        const std::vector<ExtValue> mins = allinnprod_naive(ip);
        ExtValue want = mins.front();
        for (ExtValue v : mins) want = min(want, v);
        if (got != want) fail("T[2n+1] != min inner product");
    } else if (id == "static-lowrank") {
        const auto& lr = std::get<LowRankInstance>(f.payload);
        const LowRankModel model(lr);
        DpTable fast = solve_via_static(model, make_lowrank_static_solver(lr, allinnprod_naive));
        if (corrupt) fast = corrupt_table(std::move(fast));
        if (!tables_equal(fast, solve_naive(model))) fail("static lowrank route mismatch");
    } else if (id == "all-to-min") {
        const auto& lr = std::get<LowRankInstance>(f.payload);
        InnerProductInstance ip{lr.out_vecs, lr.in_vecs, 0};
        std::vector<ExtValue> got = allinnprod_via_mininnprod(ip, mininnprod_naive);
        if (corrupt && !got.empty()) got.back() = got.back() + ExtValue::finite(1);
        if (got != allinnprod_naive(ip)) fail("allinnprod via mininnprod mismatch");
    } else if (id == "conv-to-oicc") {
        const auto& cc = std::get<CoinChangeInstance>(f.payload);
        const std::size_t half = cc.n / 2;
        if (half < 1) return res;
        CostVector a(cc.w.begin(), cc.w.begin() + std::ptrdiff_t(half));
        CostVector b(cc.w.begin() + std::ptrdiff_t(half), cc.w.begin() + std::ptrdiff_t(2 * half));
        const auto red = reduce_minplus_to_oicc(a, b);
        const DpTable t = solve_oicc(red.target);
        if (!red.check_range_identities(t)) {
            fail("range identities violated");
            return res;
        }
        CostVector got = red.extract(t);
        if (corrupt && !got.empty()) got.back() = got.back() + ExtValue::finite(1);
        if (got != minplus_naive(a, b)) fail("extracted convolution mismatch");
    } else if (id == "static-cc") {
        const auto& cc = std::get<CoinChangeInstance>(f.payload);
        DpTable fast = oicc_fast(cc, minplus_naive);
        if (corrupt) fast = corrupt_table(std::move(fast));
        if (!tables_equal(fast, solve_oicc(cc))) fail("oicc_fast mismatch");
    } else if (id == "uknap") {
        if (std::holds_alternative<CoinChangeInstance>(f.payload)) {
            const auto& cc = std::get<CoinChangeInstance>(f.payload);
            const CcToKnapsack red = cc_to_unbounded_knapsack(cc);
            ExtValue got = red.extract(knapsack_direct_dp(red.target));
            if (corrupt) got = got.is_finite() ? got + ExtValue::finite(1) : ExtValue::finite(0);
            if (got != solve_cc(cc)) fail("cc via knapsack mismatch");
        } else {
            const auto& kp = std::get<KnapsackInstance>(f.payload);
            std::int64_t got = solve_unbounded_knapsack(kp);
            if (corrupt) ++got;
            if (got != knapsack_direct_dp(kp)) fail("knapsack via oicc mismatch");
        }
    } else if (id == "oicc-via-cc") {
        const auto& cc = std::get<CoinChangeInstance>(f.payload);
        DpTable got = oicc_via_cc(cc, solve_cc);
        if (corrupt) got = corrupt_table(std::move(got));
        if (!tables_equal(got, solve_oicc(cc))) fail("oicc via cc mismatch");
    } else if (id == "chain-to-sel") {
        const auto& ch = std::get<ChainFileInstance>(f.payload);
        const ChainInstance inst = ch.instance();
        ExtValue got = chain_lws_fast(inst, selection_naive);
        if (corrupt) got = got.is_finite() ? got + ExtValue::finite(1) : ExtValue::finite(0);
        if (got != chain_lws_naive(inst)) fail("chain via selection mismatch");
    } else if (id == "sel-to-chain") {
        const auto& ch = std::get<ChainFileInstance>(f.payload);
        if (ch.items.size() % 2 != 0 || ch.items.size() < 2) return res;
        const std::size_t half = ch.items.size() / 2;
        SelectionInstance sel;
        sel.relation = ch.instance().relation;
        sel.a.assign(ch.items.begin(), ch.items.begin() + std::ptrdiff_t(half));
        sel.b.assign(ch.items.begin() + std::ptrdiff_t(half), ch.items.end());
        bool got = selection_via_chain(sel, chain_lws_naive);
        if (corrupt) got = !got;
        if (got != selection_naive(sel).has_value()) fail("selection via chain mismatch");
    } else if (id == "lis") {
        const auto& li = std::get<LisInstance>(f.payload);
        std::size_t got = lis_length(li);
        if (corrupt) ++got;
        if (got != lis_direct_dp(li.values)) fail("lis length mismatch");
    } else if (id == "uss") {
        const auto& ss = std::get<SubsetSumInstance>(f.payload);
        bool got = unbounded_subset_sum(ss);
        if (corrupt) got = !got;
        if (got != uss_direct_dp(ss)) fail("subset sum mismatch");
    } else if (id == "concave") {
        const auto& cr = std::get<ConcaveRefuelInstance>(f.payload);
        const ConcaveInstance inst = cr.oracle();
        DpTable got = concave_lws(inst);
        if (corrupt) got = corrupt_table(std::move(got));
        const FunctionModel model(inst.n, [&inst](std::size_t i, std::size_t j) {
            return ExtValue::finite(inst.weight(i, j));
        });
        if (!tables_equal(got, solve_naive(model))) fail("concave lws mismatch");
    } else {
        throw std::invalid_argument("unknown reduction id: " + id);
    }
    return res;
}

VerifyResult verify_reduction(const std::string& id, std::size_t n, std::uint64_t seed,
                              std::size_t trials, bool corrupt) {
    VerifyResult total;
    for (std::size_t t = 0; t < trials; ++t) {
        const SuiteSpec spec = suite_spec(id, t);
        Rng rng(seed * 0x9e3779b9u + t);
        std::size_t size = std::size_t(
            rng.uniform(std::int64_t(spec.min_n), std::int64_t(std::max(spec.min_n, n))));
        if (id == "conv-to-oicc" && size % 2 != 0) ++size;           // two equal halves
        if (id == "sel-to-chain" && size % 2 == 0) ++size;           // even item count
        const InstanceFile f =
            generate(spec.gen_kind, size, seed * 1000003ull + t, spec.params);
        VerifyResult r = verify_replay(id, f, corrupt);
        ++total.trials;
        if (!r.pass) {
            r.trials = total.trials;
            return r;
        }
    }
    total.detail = "all trials passed";
    return total;
}

std::vector<BenchRow> bench(const std::string& kind, const std::vector<std::size_t>& sizes,
                            const std::vector<std::string>& solver_ids, std::uint64_t seed,
                            const GenParams& params) {
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("bench: sizes must ascend");

    std::vector<BenchRow> rows;
    for (std::size_t size : sizes) {
        const InstanceFile f = generate(kind, size, seed, params);
        for (const std::string& solver : solver_ids) {
            std::array<std::uint64_t, 3> wall{};
            RunReport rep;
            for (int rep_i = 0; rep_i < 3; ++rep_i) {
                rep = run_solver(f, solver);
                wall[std::size_t(rep_i)] = rep.wall_ns;
            }
            std::sort(wall.begin(), wall.end());
            BenchRow row;
            row.kind = kind;
            row.size = size;
            row.solver = solver;
            row.answer_digest = rep.answer_digest;
            row.weight_queries = rep.weight_queries;
            row.oracle_calls = rep.oracle_calls;
            row.conv_cells = rep.conv_cells;
            row.wall_ns = wall[1];
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_bench_rows(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    for (const BenchRow& r : rows)
        os << r.kind << ',' << r.size << ',' << r.solver << ',' << r.answer_digest << ','
           << r.weight_queries << ',' << r.oracle_calls << ',' << r.conv_cells << ','
           << r.wall_ns << "\n";
    return os.str();
}

std::string format_bench_text(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "kind            size  solver            queries      oracle    cells        wall_ns\n";
    for (const BenchRow& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-14s %6zu  %-16s %10" PRIu64 " %10" PRIu64
                                         " %10" PRIu64 " %12" PRIu64 "\n",
                      r.kind.c_str(), r.size, r.solver.c_str(), r.weight_queries, r.oracle_calls,
                      r.conv_cells, r.wall_ns);
        os << line;
    }
    // doubling ratios of the combined work counter, per solver
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (rows[j].solver != rows[i].solver || rows[j].size * 2 != rows[i].size) continue;
            const double a = double(rows[j].weight_queries + rows[j].conv_cells);
            const double b = double(rows[i].weight_queries + rows[i].conv_cells);
            if (a > 0) {
                char line[160];
                std::snprintf(line, sizeof line, "ratio %-16s %6zu->%-6zu x%.2f\n",
                              rows[i].solver.c_str(), rows[j].size, rows[i].size, b / a);
                os << line;
            }
        }
    }
    return os.str();
}

}  // namespace lws
