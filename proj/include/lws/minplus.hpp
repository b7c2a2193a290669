#ifndef LWS_MINPLUS_HPP
#define LWS_MINPLUS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "lws/ext_value.hpp"

namespace lws {

// Entries finite or +inf; -inf is not a valid cost.
using CostVector = std::vector<ExtValue>;
using BitVector = std::vector<std::uint8_t>;

// (a * b)_k = min_{i+j=k} a_i + b_j for k = 0..2n-2. Theta(n^2); this is the
// exact kernel the coin-change reductions treat as their core-problem oracle.
CostVector minplus_naive(const CostVector& a, const CostVector& b);

using MinPlusKernel = std::function<CostVector(const CostVector&, const CostVector&)>;

// Classical (*, +)-convolution of 0/1 vectors: r_k = #{(i,j) : i+j=k, x_i & s_j}.
// Uses a double-precision FFT while the size guard holds (counts bounded by
// N and N <= 2^25 keep every intermediate below 2^53) and an exact word-packed
// path above it.
std::vector<std::int64_t> conv_boolean(const BitVector& x, const BitVector& s);

inline constexpr std::size_t kConvFftGuard = std::size_t(1) << 25;

// Both paths, callable directly for cross-checking.
std::vector<std::int64_t> conv_boolean_fft(const BitVector& x, const BitVector& s);
std::vector<std::int64_t> conv_boolean_exact(const BitVector& x, const BitVector& s);

// Adds c to every finite entry; +inf absorbs. Checked.
CostVector shift(const CostVector& a, std::int64_t c);

}  // namespace lws

#endif
