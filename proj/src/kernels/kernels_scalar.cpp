#include <cassert>

#include "lws/ext_value.hpp"
#include "lws/kernels.hpp"

namespace lws::kernels::scalar {

std::int64_t minplus_reduce(const std::int64_t* x, const std::int64_t* y, std::size_t m) {
    std::int64_t best = ExtValue::kPosInfRaw;
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t a = x[i];
        const std::int64_t b = y[i];
        assert(a != ExtValue::kNegInfRaw && b != ExtValue::kNegInfRaw);
        if (a == ExtValue::kPosInfRaw || b == ExtValue::kPosInfRaw) continue;
        std::int64_t s;
        if (__builtin_add_overflow(a, b, &s) || s == ExtValue::kPosInfRaw)
            throw arithmetic_error("minplus_reduce: 64-bit addition overflow");
        if (s < best) best = s;
    }
    return best;
}

void elementwise_min(std::int64_t* dst, const std::int64_t* src, std::size_t m) {
    for (std::size_t i = 0; i < m; ++i)
        if (src[i] < dst[i]) dst[i] = src[i];
}

std::int64_t dot(const std::int64_t* x, const std::int64_t* y, std::size_t d) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < d; ++i) acc = checked_add(acc, checked_mul(x[i], y[i]));
    return acc;
}

}  // namespace lws::kernels::scalar
