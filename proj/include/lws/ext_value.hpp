#ifndef LWS_EXT_VALUE_HPP
#define LWS_EXT_VALUE_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lws {

// Raised when a checked 64-bit operation would wrap, or when the two
// infinities of opposite sign meet in an addition.
struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer cost scalar extended with +inf and -inf.
//
// Encoding: +inf = INT64_MAX, -inf = INT64_MIN, everything in between is a
// finite value. The encoding makes the extended total order coincide with
// the raw int64 order, and lets flat int64 arrays double as ExtValue arrays
// inside the arithmetic kernels.
class ExtValue {
public:
    static constexpr std::int64_t kPosInfRaw = INT64_MAX;
    static constexpr std::int64_t kNegInfRaw = INT64_MIN;

    constexpr ExtValue() = default;

    static constexpr ExtValue finite(std::int64_t v) {
        assert(v != kPosInfRaw && v != kNegInfRaw);
        return ExtValue(v);
    }
    static constexpr ExtValue pos_inf() { return ExtValue(kPosInfRaw); }
    static constexpr ExtValue neg_inf() { return ExtValue(kNegInfRaw); }
    static constexpr ExtValue from_raw(std::int64_t raw) { return ExtValue(raw); }

    constexpr bool is_finite() const { return raw_ != kPosInfRaw && raw_ != kNegInfRaw; }
    constexpr bool is_pos_inf() const { return raw_ == kPosInfRaw; }
    constexpr bool is_neg_inf() const { return raw_ == kNegInfRaw; }

    constexpr std::int64_t value() const {
        assert(is_finite());
        return raw_;
    }
    constexpr std::int64_t raw() const { return raw_; }

    friend constexpr auto operator<=>(ExtValue a, ExtValue b) = default;

    // Saturating checked addition: inf absorbs, finite overflow throws.
    friend ExtValue operator+(ExtValue a, ExtValue b) {
        if (a.is_pos_inf() || b.is_pos_inf()) {
            if (a.is_neg_inf() || b.is_neg_inf())
                throw arithmetic_error("ExtValue: +inf + -inf");
            return pos_inf();
        }
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        std::int64_t r;
        if (__builtin_add_overflow(a.raw_, b.raw_, &r) || r == kPosInfRaw || r == kNegInfRaw)
            throw arithmetic_error("ExtValue: 64-bit addition overflow");
        return ExtValue(r);
    }

private:
    constexpr explicit ExtValue(std::int64_t raw) : raw_(raw) {}
    std::int64_t raw_ = 0;
};

inline ExtValue min(ExtValue a, ExtValue b) { return a < b ? a : b; }

inline std::string to_string(ExtValue v) {
    if (v.is_pos_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    return std::to_string(v.value());
}

// Checked scalar helpers used by the reductions when they rescale weights.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_error("checked_add: overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_error("checked_mul: overflow");
    return r;
}

// Floor division (round toward -inf); C++ '/' truncates toward zero.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    assert(b > 0);
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace lws

#endif
