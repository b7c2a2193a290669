#include <cassert>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lws/harness.hpp"

namespace lws {

std::uint64_t Rng::next_u64() {
    // splitmix64; stable across platforms and standard-library versions
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    if (span == 0) return std::int64_t(next_u64());    // full 64-bit range
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % span;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return lo + std::int64_t(r % span);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
    assert(den > 0 && num <= den);
    return std::uint64_t(uniform(0, std::int64_t(den) - 1)) < num;
}

ConcaveInstance ConcaveRefuelInstance::oracle() const {
    ConcaveInstance inst;
    inst.n = positions.size() - 1;
    const std::int64_t k = hop;
    const std::vector<std::int64_t>& x = positions;
    inst.weight = [&x, k](std::size_t i, std::size_t j) {
        const std::int64_t gap = x[j] - x[i] - k;
        return checked_mul(gap, gap);
    };
    return inst;
}

ChainInstance ChainFileInstance::instance() const {
    ChainInstance inst;
    inst.items = items;
    inst.weights = weights;
    if (relation == "domination")
        inst.relation = domination_relation();
    else if (relation == "containment")
        inst.relation = containment_relation();
    else
        throw std::invalid_argument("unknown chain relation: " + relation);
    return inst;
}

namespace {

void put_ext(std::ostream& os, ExtValue v) { os << to_string(v); }

ExtValue get_ext(std::istream& is) {
    std::string tok;
    if (!(is >> tok)) throw std::invalid_argument("instance: missing value");
    if (tok == "inf") return ExtValue::pos_inf();
    if (tok == "-inf") return ExtValue::neg_inf();
    return ExtValue::finite(std::stoll(tok));
}

std::int64_t get_i64(std::istream& is) {
    std::int64_t v;
    if (!(is >> v)) throw std::invalid_argument("instance: missing integer");
    return v;
}

std::string expect_key(std::istream& is, const std::string& key) {
    std::string tok;
    if (!(is >> tok) || tok != key)
        throw std::invalid_argument("instance: expected '" + key + "'");
    return tok;
}

}  // namespace

std::string serialize(const InstanceFile& f) {
    std::ostringstream os;
    os << "lws-instance v1\n";
    os << "kind " << f.kind << "\n";
    os << "seed " << f.seed << "\n";

    if (const auto* e = std::get_if<ExplicitInstance>(&f.payload)) {
        os << "n " << e->n << "\n";
        std::size_t pos = 0;
        for (std::size_t i = 0; i < e->n; ++i) {
            os << "row";
            for (std::size_t j = i + 1; j <= e->n; ++j) {
                os << ' ';
                put_ext(os, e->upper[pos++]);
            }
            os << "\n";
        }
    } else if (const auto* lr = std::get_if<LowRankInstance>(&f.payload)) {
        os << "n " << lr->n << "\n";
        os << "d " << lr->dim() << "\n";
        for (const Item& v : lr->out_vecs) {
            os << "out";
            for (std::int64_t c : v) os << ' ' << c;
            os << "\n";
        }
        for (const Item& v : lr->in_vecs) {
            os << "in";
            for (std::int64_t c : v) os << ' ' << c;
            os << "\n";
        }
    } else if (const auto* cc = std::get_if<CoinChangeInstance>(&f.payload)) {
        os << "n " << cc->n << "\n";
        os << "w";
        for (ExtValue v : cc->w) {
            os << ' ';
            put_ext(os, v);
        }
        os << "\n";
    } else if (const auto* kp = std::get_if<KnapsackInstance>(&f.payload)) {
        os << "n " << kp->n << "\n";
        os << "p";
        for (std::int64_t p : kp->profits) {
            if (p < 0)
                os << " none";
            else
                os << ' ' << p;
        }
        os << "\n";
    } else if (const auto* ch = std::get_if<ChainFileInstance>(&f.payload)) {
        os << "relation " << ch->relation << "\n";
        os << "n " << ch->items.size() - 1 << "\n";
        os << "d " << ch->items.front().size() << "\n";
        os << "w";
        for (std::int64_t w : ch->weights) os << ' ' << w;
        os << "\n";
        for (const Item& v : ch->items) {
            os << "x";
            for (std::int64_t c : v) os << ' ' << c;
            os << "\n";
        }
    } else if (const auto* lis = std::get_if<LisInstance>(&f.payload)) {
        os << "n " << lis->values.size() << "\n";
        os << "x";
        for (std::int64_t v : lis->values) os << ' ' << v;
        os << "\n";
    } else if (const auto* uss = std::get_if<SubsetSumInstance>(&f.payload)) {
        os << "n " << uss->n << "\n";
        os << "s";
        for (std::size_t v : uss->members) os << ' ' << v;
        os << "\n";
    } else if (const auto* cr = std::get_if<ConcaveRefuelInstance>(&f.payload)) {
        os << "n " << cr->positions.size() - 1 << "\n";
        os << "k " << cr->hop << "\n";
        os << "x";
        for (std::int64_t v : cr->positions) os << ' ' << v;
        os << "\n";
    }
    os << "end\n";
    return os.str();
}

InstanceFile parse_instance(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    if (!(is >> tok) || tok != "lws-instance") throw std::invalid_argument("bad magic");
    if (!(is >> tok) || tok != "v1") throw std::invalid_argument("bad version");

    InstanceFile f;
    expect_key(is, "kind");
    is >> f.kind;
    expect_key(is, "seed");
    is >> f.seed;

    if (f.kind == "explicit") {
        ExplicitInstance e;
        expect_key(is, "n");
        e.n = std::size_t(get_i64(is));
        e.upper.reserve(ExplicitModel::entry_count(e.n));
        for (std::size_t i = 0; i < e.n; ++i) {
            expect_key(is, "row");
            for (std::size_t j = i + 1; j <= e.n; ++j) e.upper.push_back(get_ext(is));
        }
        f.payload = std::move(e);
    } else if (f.kind == "lowrank") {
        LowRankInstance lr;
        expect_key(is, "n");
        lr.n = std::size_t(get_i64(is));
        expect_key(is, "d");
        const std::size_t d = std::size_t(get_i64(is));
        for (std::size_t i = 0; i < lr.n; ++i) {
            expect_key(is, "out");
            Item v(d);
            for (auto& c : v) c = get_i64(is);
            lr.out_vecs.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < lr.n; ++i) {
            expect_key(is, "in");
            Item v(d);
            for (auto& c : v) c = get_i64(is);
            lr.in_vecs.push_back(std::move(v));
        }
        f.payload = std::move(lr);
    } else if (f.kind == "toeplitz") {
        CoinChangeInstance cc;
        expect_key(is, "n");
        cc.n = std::size_t(get_i64(is));
        expect_key(is, "w");
        for (std::size_t i = 0; i < cc.n; ++i) cc.w.push_back(get_ext(is));
        f.payload = std::move(cc);
    } else if (f.kind == "knapsack") {
        KnapsackInstance kp;
        expect_key(is, "n");
        kp.n = std::size_t(get_i64(is));
        expect_key(is, "p");
        for (std::size_t i = 0; i < kp.n; ++i) {
            if (!(is >> tok)) throw std::invalid_argument("knapsack: missing profit");
            kp.profits.push_back(tok == "none" ? -1 : std::stoll(tok));
        }
        f.payload = std::move(kp);
    } else if (f.kind == "chain-boxes" || f.kind == "chain-sets") {
        ChainFileInstance ch;
        expect_key(is, "relation");
        is >> ch.relation;
        expect_key(is, "n");
        const std::size_t n = std::size_t(get_i64(is));
        expect_key(is, "d");
        const std::size_t d = std::size_t(get_i64(is));
        expect_key(is, "w");
        ch.weights.resize(n >= 1 ? n - 1 : 0);
        for (auto& w : ch.weights) w = get_i64(is);
        for (std::size_t i = 0; i <= n; ++i) {
            expect_key(is, "x");
            Item v(d);
            for (auto& c : v) c = get_i64(is);
            ch.items.push_back(std::move(v));
        }
        f.payload = std::move(ch);
    } else if (f.kind == "lis") {
        LisInstance li;
        expect_key(is, "n");
        const std::size_t n = std::size_t(get_i64(is));
        expect_key(is, "x");
        li.values.resize(n);
        for (auto& v : li.values) v = get_i64(is);
        f.payload = std::move(li);
    } else if (f.kind == "uss") {
        SubsetSumInstance ss;
        expect_key(is, "n");
        ss.n = std::size_t(get_i64(is));
        if (!(is >> tok) || tok != "s") throw std::invalid_argument("uss: expected 's'");
        std::string line;
        std::getline(is, line);
        std::istringstream ls(line);
        std::int64_t v;
        while (ls >> v) ss.members.push_back(std::size_t(v));
        f.payload = std::move(ss);
    } else if (f.kind == "concave-refuel") {
        ConcaveRefuelInstance cr;
        expect_key(is, "n");
        const std::size_t n = std::size_t(get_i64(is));
        expect_key(is, "k");
        cr.hop = get_i64(is);
        expect_key(is, "x");
        cr.positions.resize(n + 1);
        for (auto& v : cr.positions) v = get_i64(is);
        f.payload = std::move(cr);
    } else {
        throw std::invalid_argument("unknown instance kind: " + f.kind);
    }
    expect_key(is, "end");
    return f;
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void store_instance(const InstanceFile& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write instance file: " + path);
    out << serialize(f);
}

std::vector<std::string> instance_kinds() {
    return {"explicit", "lowrank",    "toeplitz", "knapsack",       "chain-boxes",
            "chain-sets", "lis",      "uss",      "concave-refuel"};
}

InstanceFile generate(const std::string& kind, std::size_t n, std::uint64_t seed,
                      const GenParams& params) {
    if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
    Rng rng(seed ^ 0x5c5c5c5c00000000ull);
    const std::int64_t W = params.w_bound;
    if (W < 1) throw std::invalid_argument("generate: w_bound must be >= 1");

    InstanceFile f;
    f.kind = kind;
    f.seed = seed;

    auto ext_entry = [&]() {
        if (rng.chance(params.inf_per_mille, 1000)) return ExtValue::pos_inf();
        return ExtValue::finite(rng.uniform(-W, W));
    };

    if (kind == "explicit") {
        ExplicitInstance e;
        e.n = n;
        const std::size_t cells = ExplicitModel::entry_count(n);
        e.upper.reserve(cells);
        for (std::size_t c = 0; c < cells; ++c) e.upper.push_back(ext_entry());
        f.payload = std::move(e);
    } else if (kind == "lowrank") {
        LowRankInstance lr;
        lr.n = n;
        auto vec = [&]() {
            Item v(params.dim);
            for (auto& c : v) c = rng.uniform(-W, W);
            return v;
        };
        for (std::size_t i = 0; i < n; ++i) lr.out_vecs.push_back(vec());
        for (std::size_t i = 0; i < n; ++i) lr.in_vecs.push_back(vec());
        f.payload = std::move(lr);
    } else if (kind == "toeplitz") {
        CoinChangeInstance cc;
        cc.n = n;
        for (std::size_t i = 0; i < n; ++i) cc.w.push_back(ext_entry());
        // keep at least one coin so tables are not all-inf
        if (cc.w[0].is_pos_inf() && n >= 1) cc.w[0] = ExtValue::finite(rng.uniform(-W, W));
        f.payload = std::move(cc);
    } else if (kind == "knapsack") {
        KnapsackInstance kp;
        kp.n = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.chance(params.inf_per_mille, 1000))
                kp.profits.push_back(-1);
            else
                kp.profits.push_back(rng.uniform(0, W));
        }
        f.payload = std::move(kp);
    } else if (kind == "chain-boxes" || kind == "chain-sets") {
        ChainFileInstance ch;
        ch.relation = kind == "chain-boxes" ? "domination" : "containment";
        const bool boolean = kind == "chain-sets";
        for (std::size_t i = 0; i <= n; ++i) {
            Item v(params.dim);
            for (auto& c : v) c = boolean ? rng.uniform(0, 1) : rng.uniform(0, W);
            ch.items.push_back(std::move(v));
        }
        for (std::size_t i = 0; i + 1 < n; ++i) ch.weights.push_back(rng.uniform(-W, W));
        f.payload = std::move(ch);
    } else if (kind == "lis") {
        LisInstance li;
        for (std::size_t i = 0; i < n; ++i) li.values.push_back(rng.uniform(1, W));
        f.payload = std::move(li);
    } else if (kind == "uss") {
        SubsetSumInstance ss;
        ss.n = n;
        for (std::size_t k = 1; k <= n; ++k)
            if (rng.chance(params.inf_per_mille, 1000)) ss.members.push_back(k);
        if (ss.members.empty()) ss.members.push_back(std::size_t(rng.uniform(1, std::int64_t(n))));
        f.payload = std::move(ss);
    } else if (kind == "concave-refuel") {
        ConcaveRefuelInstance cr;
        cr.hop = rng.uniform(1, 2 * W);
        std::int64_t x = 0;
        cr.positions.push_back(0);
        for (std::size_t i = 1; i <= n; ++i) {
            x += rng.uniform(1, W);
            cr.positions.push_back(x);
        }
        f.payload = std::move(cr);
    } else {
        throw std::invalid_argument("unknown instance kind: " + kind);
    }
    return f;
}

}  // namespace lws
