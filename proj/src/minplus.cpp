#include "lws/minplus.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>

#include "lws/kernels.hpp"

namespace lws {

CostVector minplus_naive(const CostVector& a, const CostVector& b) {
    assert(!a.empty() && !b.empty());
    const std::size_t n = a.size();
    const std::size_t m = b.size();

    // out_k = min over the contiguous window a[i] + rev(b)[m-1-k+i]; one
    // guard scan per input lets every window run on the vector backend.
    std::vector<std::int64_t> brev(m);
    for (std::size_t j = 0; j < m; ++j) brev[j] = b[m - 1 - j].raw();
    const auto* araw = reinterpret_cast<const std::int64_t*>(a.data());
    const bool guarded = kernels::within_minplus_guard(std::span<const ExtValue>(a)) &&
                         kernels::within_minplus_guard(std::span<const ExtValue>(b));

    CostVector out(n + m - 1, ExtValue::pos_inf());
    for (std::size_t k = 0; k < n + m - 1; ++k) {
        const std::size_t i0 = k >= m ? k - m + 1 : 0;
        const std::size_t i1 = std::min(k, n - 1);
        const std::size_t len = i1 - i0 + 1;
        const std::size_t joff = m - 1 - k + i0;
        out[k] = ExtValue::from_raw(
            kernels::minplus_reduce(araw + i0, brev.data() + joff, len, guarded));
    }
    return out;
}

CostVector shift(const CostVector& a, std::int64_t c) {
    CostVector out;
    out.reserve(a.size());
    const ExtValue cv = ExtValue::finite(c);
    for (ExtValue v : a) out.push_back(v.is_pos_inf() ? v : v + cv);
    return out;
}

namespace {

void fft(std::vector<std::complex<double>>& v, bool inverse) {
    const std::size_t n = v.size();
    assert((n & (n - 1)) == 0);
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2 * std::numbers::pi / double(len) * (inverse ? -1 : 1);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = v[i + k];
                const std::complex<double> t = v[i + k + len / 2] * w;
                v[i + k] = u + t;
                v[i + k + len / 2] = u - t;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : v) x /= double(n);
}

}  // namespace

std::vector<std::int64_t> conv_boolean_fft(const BitVector& x, const BitVector& s) {
    const std::size_t out_len = x.size() + s.size() - 1;
    std::size_t sz = 1;
    while (sz < out_len) sz <<= 1;
    std::vector<std::complex<double>> fa(sz), fb(sz);
    for (std::size_t i = 0; i < x.size(); ++i) fa[i] = double(x[i] ? 1 : 0);
    for (std::size_t i = 0; i < s.size(); ++i) fb[i] = double(s[i] ? 1 : 0);
    fft(fa, false);
    fft(fb, false);
    for (std::size_t i = 0; i < sz; ++i) fa[i] *= fb[i];
    fft(fa, true);
    std::vector<std::int64_t> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = std::llround(fa[i].real());
    return out;
}

std::vector<std::int64_t> conv_boolean_exact(const BitVector& x, const BitVector& s) {
    const std::size_t nx = x.size();
    const std::size_t ns = s.size();

    // r_k = sum_i x[i] & s_rev[i + (ns-1-k)] with s_rev the reversed s:
    // popcount of x AND a word-shifted copy of s_rev, O(N/64) per output.
    // s_rev is padded by nx-1 zero bits on both sides so the shift offset
    // i + (ns-1-k) + (nx-1) is always in range.
    const std::size_t padded_bits = ns + 2 * (nx - 1) + 64;
    const std::size_t swords = (padded_bits + 63) / 64;
    std::vector<std::uint64_t> srev(swords, 0);
    for (std::size_t t = 0; t < ns; ++t) {
        if (!s[ns - 1 - t]) continue;
        const std::size_t bit = t + nx - 1;
        srev[bit / 64] |= std::uint64_t(1) << (bit % 64);
    }

    const std::size_t xwords = (nx + 63) / 64;
    std::vector<std::uint64_t> xw(xwords + 1, 0);
    for (std::size_t i = 0; i < nx; ++i)
        if (x[i]) xw[i / 64] |= std::uint64_t(1) << (i % 64);

    std::vector<std::int64_t> out(nx + ns - 1, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        // window start in padded srev bits: position of i = 0
        const std::size_t start = (ns - 1 - k) + (nx - 1);
        const std::size_t word = start / 64;
        const unsigned shift = unsigned(start % 64);
        std::int64_t cnt = 0;
        for (std::size_t w = 0; w < xwords; ++w) {
            std::uint64_t window = srev[word + w] >> shift;
            if (shift) window |= srev[word + w + 1] << (64 - shift);
            cnt += std::int64_t(__builtin_popcountll(window & xw[w]));
        }
        out[k] = cnt;
    }
    return out;
}

std::vector<std::int64_t> conv_boolean(const BitVector& x, const BitVector& s) {
    assert(!x.empty() && !s.empty());
    if (std::max(x.size(), s.size()) <= kConvFftGuard) return conv_boolean_fft(x, s);
    return conv_boolean_exact(x, s);
}

}  // namespace lws
