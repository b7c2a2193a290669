#ifndef LWS_WEIGHT_MODEL_HPP
#define LWS_WEIGHT_MODEL_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lws/counters.hpp"
#include "lws/ext_value.hpp"

namespace lws {

// A queryable view of the weight matrix w_{i,j}, 0 <= i < j <= n.
// Models are immutable after construction and safe to share across threads;
// query(i, j) is pure. Querying i >= j is a contract violation.
class WeightModel {
public:
    explicit WeightModel(std::size_t n) : n_(n) {}
    virtual ~WeightModel() = default;

    std::size_t size() const { return n_; }

    ExtValue query(std::size_t i, std::size_t j) const {
        assert(i < j && j <= n_);
        ++counters().weight_queries;
        return query_impl(i, j);
    }

protected:
    virtual ExtValue query_impl(std::size_t i, std::size_t j) const = 0;

private:
    std::size_t n_;
};

// Explicit upper-triangular matrix.
class ExplicitModel : public WeightModel {
public:
    ExplicitModel(std::size_t n, std::vector<ExtValue> upper);

    // entries(i, j) storage order: rows i = 0..n-1, each row j = i+1..n.
    static std::size_t entry_count(std::size_t n) { return n * (n + 1) / 2; }
    const std::vector<ExtValue>& entries() const { return w_; }

protected:
    ExtValue query_impl(std::size_t i, std::size_t j) const override;

private:
    std::size_t index(std::size_t i, std::size_t j) const;
    std::vector<ExtValue> w_;
};

// w_{i,j} = word[j - i]; the coin-change weight matrix.
class ToeplitzModel : public WeightModel {
public:
    // word[k-1] is the weight of difference k, k = 1..n.
    ToeplitzModel(std::size_t n, std::vector<ExtValue> word);
    const std::vector<ExtValue>& word() const { return word_; }

protected:
    ExtValue query_impl(std::size_t i, std::size_t j) const override;

private:
    std::vector<ExtValue> word_;
};

// Arbitrary pure function; used by the concave oracle model and tests.
class FunctionModel : public WeightModel {
public:
    FunctionModel(std::size_t n, std::function<ExtValue(std::size_t, std::size_t)> fn)
        : WeightModel(n), fn_(std::move(fn)) {}

protected:
    ExtValue query_impl(std::size_t i, std::size_t j) const override { return fn_(i, j); }

private:
    std::function<ExtValue(std::size_t, std::size_t)> fn_;
};

}  // namespace lws

#endif
