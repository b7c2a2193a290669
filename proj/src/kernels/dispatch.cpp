#include <cstdlib>
#include <cstring>

#include "lws/kernels.hpp"

namespace lws::kernels {

namespace {

Backend detect_backend() {
    if (const char* env = std::getenv("LWS_KERNEL_BACKEND")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2::available()) return Backend::avx2;
    }
    return avx2::available() ? Backend::avx2 : Backend::scalar;
}

}  // namespace

Backend active_backend() {
    static const Backend b = detect_backend();
    return b;
}

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

bool within_minplus_guard(std::span<const std::int64_t> v) {
    for (std::int64_t x : v) {
        if (x == ExtValue::kPosInfRaw) continue;
        if (x > kFiniteGuard || x < -kFiniteGuard) return false;
    }
    return true;
}

bool within_dot_guard(std::span<const std::int64_t> v) {
    if (v.size() > (std::size_t(1) << 30)) return false;
    for (std::int64_t x : v)
        if (x > kDotOperandGuard || x < -kDotOperandGuard) return false;
    return true;
}

std::int64_t minplus_reduce(const std::int64_t* x, const std::int64_t* y, std::size_t m,
                            bool guarded) {
    if (guarded && active_backend() == Backend::avx2) return avx2::minplus_reduce(x, y, m);
    return scalar::minplus_reduce(x, y, m);
}

void elementwise_min(std::int64_t* dst, const std::int64_t* src, std::size_t m) {
    if (active_backend() == Backend::avx2) {
        avx2::elementwise_min(dst, src, m);
        return;
    }
    scalar::elementwise_min(dst, src, m);
}

std::int64_t dot(const std::int64_t* x, const std::int64_t* y, std::size_t d, bool guarded) {
    if (guarded && active_backend() == Backend::avx2) return avx2::dot(x, y, d);
    return scalar::dot(x, y, d);
}

}  // namespace lws::kernels
