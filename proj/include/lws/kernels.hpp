#ifndef LWS_KERNELS_HPP
#define LWS_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>

#include "lws/ext_value.hpp"

namespace lws::kernels {

// The arithmetic inner loops of the solvers, as flat int64 kernels over the
// ExtValue raw encoding (+inf = INT64_MAX; -inf is not accepted here).
//
// Every kernel exists twice: a scalar reference with fully checked
// arithmetic, and an AVX2 variant selected at run time. The AVX2 variants
// require the magnitude guards below; callers check the guard once per
// array and fall back to the scalar path otherwise. Equivalence of the two
// variants on guarded inputs is enforced by tests/test_kernels.cpp.

// Finite magnitudes up to this bound cannot overflow inside the vector
// paths: +inf is clamped to 2^61 on load, so any sum stays below 2^62 and
// sums involving an infinity stay above the 2^60 detection threshold while
// finite+finite sums stay at or below it.
inline constexpr std::int64_t kFiniteGuard = std::int64_t(1) << 59;
inline constexpr std::int64_t kInfClamp = std::int64_t(1) << 61;
inline constexpr std::int64_t kInfThreshold = std::int64_t(1) << 60;

// Guard for the dot kernel: operands must fit in 32 bits so the 32x32->64
// lane multiply is exact, and d * max|x| * max|y| must stay within 2^62.
inline constexpr std::int64_t kDotOperandGuard = (std::int64_t(1) << 31) - 1;

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name(Backend b);

namespace scalar {
// min_i sat_add(x[i], y[i]); +inf absorbs; finite overflow throws.
std::int64_t minplus_reduce(const std::int64_t* x, const std::int64_t* y, std::size_t m);
// dst[i] = min(dst[i], src[i]) under the raw order (valid for +-inf too).
void elementwise_min(std::int64_t* dst, const std::int64_t* src, std::size_t m);
// sum_i x[i]*y[i], checked.
std::int64_t dot(const std::int64_t* x, const std::int64_t* y, std::size_t d);
}  // namespace scalar

namespace avx2 {
bool available();
std::int64_t minplus_reduce(const std::int64_t* x, const std::int64_t* y, std::size_t m);
void elementwise_min(std::int64_t* dst, const std::int64_t* src, std::size_t m);
std::int64_t dot(const std::int64_t* x, const std::int64_t* y, std::size_t d);
}  // namespace avx2

// True if every entry is +inf or finite with |v| <= kFiniteGuard.
bool within_minplus_guard(std::span<const std::int64_t> v);
inline bool within_minplus_guard(std::span<const ExtValue> v) {
    return within_minplus_guard(
        std::span<const std::int64_t>(reinterpret_cast<const std::int64_t*>(v.data()), v.size()));
}

// True if every entry is finite with |v| <= kDotOperandGuard.
bool within_dot_guard(std::span<const std::int64_t> v);

// Dispatching entry points. `guarded` is the caller's promise that the
// relevant guard holds for both operands; only then may the vector path run.
std::int64_t minplus_reduce(const std::int64_t* x, const std::int64_t* y, std::size_t m,
                            bool guarded);
void elementwise_min(std::int64_t* dst, const std::int64_t* src, std::size_t m);
std::int64_t dot(const std::int64_t* x, const std::int64_t* y, std::size_t d, bool guarded);

static_assert(sizeof(ExtValue) == sizeof(std::int64_t));

}  // namespace lws::kernels

#endif
