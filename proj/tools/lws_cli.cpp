#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lws/harness.hpp"
#include "lws/kernels.hpp"

namespace {

// exit codes: 0 pass, 1 mismatch, 2 usage error, 3 arithmetic overflow
constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::size_t(std::stoull(tok)));
    return sizes;
}

std::vector<std::string> parse_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

void print_report(const lws::RunReport& rep, const std::string& format) {
    if (format == "rows") {
        std::cout << rep.kind << ',' << rep.size << ',' << rep.solver << ',' << rep.answer_digest
                  << ',' << rep.weight_queries << ',' << rep.oracle_calls << ',' << rep.conv_cells
                  << ',' << rep.wall_ns << "\n";
        return;
    }
    std::cout << "kind:    " << rep.kind << "\n"
              << "solver:  " << rep.solver << "\n"
              << "size:    " << rep.size << "\n"
              << "answer:  " << rep.answer_digest << "\n"
              << "queries: " << rep.weight_queries << "\n"
              << "oracle:  " << rep.oracle_calls << "\n"
              << "cells:   " << rep.conv_cells << "\n"
              << "wall_ns: " << rep.wall_ns << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"least-weight subsequence laboratory"};
    app.require_subcommand(1);

    std::string kind = "toeplitz";
    std::string out_path;
    std::string solver;
    std::string format = "text";
    std::string replay_path;
    std::string sizes_csv;
    std::string solvers_csv;
    std::string reduction;
    std::string instance_path;
    std::size_t n = 16;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::int64_t w_bound = 50;
    std::size_t dim = 3;
    bool corrupt = false;

    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    gen->add_option("--kind", kind, "instance kind")->required();
    gen->add_option("--n", n, "instance size")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--w-bound", w_bound, "magnitude bound");
    gen->add_option("--dim", dim, "vector dimension");
    gen->add_option("--out", out_path, "output path (stdout if omitted)");

    auto* solve = app.add_subcommand("solve", "run one solver on an instance file");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--solver", solver, "solver id")->required();
    solve->add_option("--format", format, "text|rows");

    auto* verify = app.add_subcommand("verify", "run a reduction equivalence suite");
    verify->add_option("reduction", reduction, "reduction id")->required();
    verify->add_option("--n", n, "max instance size");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "number of trials");
    verify->add_option("--out", out_path, "counterexample output path");
    verify->add_option("--replay", replay_path, "re-check one stored instance");
    verify->add_flag("--corrupt", corrupt, "negative control: corrupt the solver under test");

    auto* bench = app.add_subcommand("bench", "counter and wall-time scaling per solver");
    bench->add_option("--kind", kind, "instance kind")->required();
    bench->add_option("--sizes", sizes_csv, "comma-separated ascending sizes")->required();
    bench->add_option("--solver", solvers_csv, "comma-separated solver ids")->required();
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--w-bound", w_bound, "magnitude bound");
    bench->add_option("--format", format, "text|rows");

    auto* list = app.add_subcommand("list", "list kinds, solvers and reduction ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        lws::GenParams params;
        params.w_bound = w_bound;
        params.dim = dim;

        if (gen->parsed()) {
            const lws::InstanceFile f = lws::generate(kind, n, seed, params);
            if (out_path.empty())
                std::cout << lws::serialize(f);
            else
                lws::store_instance(f, out_path);
            return kExitPass;
        }
        if (solve->parsed()) {
            const lws::InstanceFile f = lws::load_instance(instance_path);
            print_report(lws::run_solver(f, solver), format);
            return kExitPass;
        }
        if (verify->parsed()) {
            lws::VerifyResult res;
            if (!replay_path.empty())
                res = lws::verify_replay(reduction, lws::load_instance(replay_path), corrupt);
            else
                res = lws::verify_reduction(reduction, n, seed, trials, corrupt);
            if (res.pass) {
                std::cout << "verify " << reduction << ": pass (" << res.trials << " trials)\n";
                return kExitPass;
            }
            std::cout << "verify " << reduction << ": FAIL at trial " << res.trials << ": "
                      << res.detail << "\n";
            if (res.counterexample) {
                const std::string path =
                    out_path.empty() ? "counterexample-" + reduction + ".txt" : out_path;
                lws::store_instance(*res.counterexample, path);
                std::cout << "counterexample written to " << path << "\n";
            }
            return kExitMismatch;
        }
        if (bench->parsed()) {
            const auto rows =
                lws::bench(kind, parse_sizes(sizes_csv), parse_list(solvers_csv), seed, params);
            std::cout << (format == "rows" ? lws::format_bench_rows(rows)
                                           : lws::format_bench_text(rows));
            return kExitPass;
        }
        if (list->parsed()) {
            std::cout << "kernel backend: "
                      << lws::kernels::backend_name(lws::kernels::active_backend()) << "\n";
            std::cout << "kinds:";
            for (const auto& k : lws::instance_kinds()) std::cout << ' ' << k;
            std::cout << "\nsolvers:\n";
            for (const auto& k : lws::instance_kinds()) {
                std::cout << "  " << k << ":";
                for (const auto& s : lws::solvers_for_kind(k)) std::cout << ' ' << s;
                std::cout << "\n";
            }
            std::cout << "reductions:";
            for (const auto& r : lws::reduction_ids()) std::cout << ' ' << r;
            std::cout << "\n";
            return kExitPass;
        }
    } catch (const lws::arithmetic_error& e) {
        std::cerr << "arithmetic overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
