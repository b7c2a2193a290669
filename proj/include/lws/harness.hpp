#ifndef LWS_HARNESS_HPP
#define LWS_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lws/chains.hpp"
#include "lws/coinchange.hpp"
#include "lws/core.hpp"
#include "lws/lowrank.hpp"
#include "lws/nearlinear.hpp"

namespace lws {

// Deterministic bounded sampler over mt19937_64; the standard distributions
// are implementation-defined, this one reproduces bit-identically everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    // uniform on [lo, hi], inclusive
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    // true with probability num/den
    bool chance(std::uint64_t num, std::uint64_t den);

private:
    std::uint64_t state_;
};

// Textual instance container. Payload variants per kind; +-inf spelled as
// the literals "inf" / "-inf". parse(serialize(x)) == x.
struct ConcaveRefuelInstance {
    std::int64_t hop = 0;                    // preferred hop length k
    std::vector<std::int64_t> positions;     // x_0..x_n ascending

    ConcaveInstance oracle() const;
};

struct ExplicitInstance {
    std::size_t n = 0;
    std::vector<ExtValue> upper;    // ExplicitModel storage order

    ExplicitModel model() const { return ExplicitModel(n, upper); }
};

struct ChainFileInstance {
    std::string relation;                  // "domination" or "containment"
    std::vector<Item> items;               // x_0..x_n
    std::vector<std::int64_t> weights;     // w_1..w_{n-1}

    ChainInstance instance() const;
};

struct InstanceFile {
    std::string kind;
    std::uint64_t seed = 0;    // provenance only
    std::variant<ExplicitInstance, LowRankInstance, CoinChangeInstance, KnapsackInstance,
                 ChainFileInstance, LisInstance, SubsetSumInstance, ConcaveRefuelInstance>
        payload;
};

std::string serialize(const InstanceFile& f);
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);
void store_instance(const InstanceFile& f, const std::string& path);

struct GenParams {
    std::int64_t w_bound = 50;    // magnitude bound for weights / values
    std::size_t dim = 3;          // vector dimension where applicable
    // density of pos_inf entries (per mille) for kinds that admit them
    std::uint64_t inf_per_mille = 150;
};

// Deterministic: identical (kind, n, seed, params) give bit-identical files.
// Kinds: explicit lowrank toeplitz knapsack chain-boxes chain-sets lis uss
// concave-refuel.
InstanceFile generate(const std::string& kind, std::size_t n, std::uint64_t seed,
                      const GenParams& params = {});

std::vector<std::string> instance_kinds();

struct RunReport {
    std::string kind;
    std::string solver;
    std::size_t size = 0;
    std::string answer_digest;
    std::uint64_t weight_queries = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t conv_cells = 0;
    std::uint64_t wall_ns = 0;
};

// Solvers compatible with an instance kind, e.g. "lws-naive" for explicit,
// "oicc-fast" for toeplitz, "lis-nearlinear" for lis.
std::vector<std::string> solvers_for_kind(const std::string& kind);
RunReport run_solver(const InstanceFile& f, const std::string& solver_id);

struct VerifyResult {
    bool pass = true;
    std::size_t trials = 0;
    std::string detail;
    std::optional<InstanceFile> counterexample;
};

// Reduction-level oracle-equivalence suites, one per reduction arrow.
// corrupt injects a deliberate off-by-one into the solver under test, as the
// negative control for the harness itself.
std::vector<std::string> reduction_ids();
VerifyResult verify_reduction(const std::string& reduction_id, std::size_t n, std::uint64_t seed,
                              std::size_t trials, bool corrupt = false);
// Re-check one stored counterexample instance.
VerifyResult verify_replay(const std::string& reduction_id, const InstanceFile& f,
                           bool corrupt = false);

struct BenchRow {
    std::string kind;
    std::size_t size = 0;
    std::string solver;
    std::string answer_digest;
    std::uint64_t weight_queries = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t conv_cells = 0;
    std::uint64_t wall_ns = 0;    // median of 3
};

std::vector<BenchRow> bench(const std::string& kind, const std::vector<std::size_t>& sizes,
                            const std::vector<std::string>& solver_ids, std::uint64_t seed,
                            const GenParams& params = {});
std::string format_bench_rows(const std::vector<BenchRow>& rows);
std::string format_bench_text(const std::vector<BenchRow>& rows);

std::string digest_table(const DpTable& t);

}  // namespace lws

#endif
