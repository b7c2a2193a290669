#include "lws/ext_value.hpp"
#include "lws/kernels.hpp"

#if defined(LWS_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace lws::kernels::avx2 {

#if defined(LWS_HAVE_AVX2)

bool available() { return __builtin_cpu_supports("avx2"); }

namespace {

inline __m256i min_epi64(__m256i a, __m256i b) {
    const __m256i gt = _mm256_cmpgt_epi64(a, b);
    return _mm256_blendv_epi8(a, b, gt);
}

inline std::int64_t hmin_epi64(__m256i v) {
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    std::int64_t best = lanes[0];
    for (int i = 1; i < 4; ++i)
        if (lanes[i] < best) best = lanes[i];
    return best;
}

}  // namespace

// Preconditions (checked by the caller via within_minplus_guard): entries are
// +inf (INT64_MAX) or finite with |v| <= kFiniteGuard. +inf lanes are clamped
// to kInfClamp before the add, so no lane wraps and any sum touching an
// infinity lands above kInfThreshold.
std::int64_t minplus_reduce(const std::int64_t* x, const std::int64_t* y, std::size_t m) {
    const __m256i inf = _mm256_set1_epi64x(ExtValue::kPosInfRaw);
    const __m256i clamp = _mm256_set1_epi64x(kInfClamp);
    __m256i acc = clamp;
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        a = _mm256_blendv_epi8(a, clamp, _mm256_cmpeq_epi64(a, inf));
        b = _mm256_blendv_epi8(b, clamp, _mm256_cmpeq_epi64(b, inf));
        acc = min_epi64(acc, _mm256_add_epi64(a, b));
    }
    std::int64_t best = hmin_epi64(acc);
    for (; i < m; ++i) {
        std::int64_t a = x[i] == ExtValue::kPosInfRaw ? kInfClamp : x[i];
        std::int64_t b = y[i] == ExtValue::kPosInfRaw ? kInfClamp : y[i];
        if (a + b < best) best = a + b;
    }
    return best > kInfThreshold ? ExtValue::kPosInfRaw : best;
}

void elementwise_min(std::int64_t* dst, const std::int64_t* src, std::size_t m) {
    std::size_t i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), min_epi64(d, s));
    }
    for (; i < m; ++i)
        if (src[i] < dst[i]) dst[i] = src[i];
}

// Precondition (within_dot_guard): operands fit in int32, so the 32x32->64
// lane multiply is exact, and the accumulator cannot wrap.
std::int64_t dot(const std::int64_t* x, const std::int64_t* y, std::size_t d) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= d; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        acc = _mm256_add_epi64(acc, _mm256_mul_epi32(a, b));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < d; ++i) sum += x[i] * y[i];
    return sum;
}

#else

bool available() { return false; }

std::int64_t minplus_reduce(const std::int64_t* x, const std::int64_t* y, std::size_t m) {
    return scalar::minplus_reduce(x, y, m);
}

void elementwise_min(std::int64_t* dst, const std::int64_t* src, std::size_t m) {
    scalar::elementwise_min(dst, src, m);
}

std::int64_t dot(const std::int64_t* x, const std::int64_t* y, std::size_t d) {
    return scalar::dot(x, y, d);
}

#endif

}  // namespace lws::kernels::avx2
