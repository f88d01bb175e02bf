#pragma once

#include <cmath>
#include <cstdint>

namespace fuzzybv {

/// mantissa * 2^exponent with a 64-bit exponent.
///
/// Weight products like u_k * sum(v_i) are routinely representable while their
/// factors are not (u_k = 2^-k against v_i = 2^i at k = 10^4). Products and sums
/// round exactly like double arithmetic whenever the double result is normal.
class ScaledReal {
public:
    constexpr ScaledReal() = default;

    static ScaledReal from_double(double x) noexcept {
        ScaledReal r;
        int e = 0;
        r.mant_ = std::frexp(x, &e);
        r.exp_ = (r.mant_ == 0.0 || !std::isfinite(r.mant_)) ? 0 : e;
        return r;
    }

    /// sign * 2^log2_magnitude, for values whose magnitude is only known in log form.
    static ScaledReal from_log2(double log2_magnitude, double sign) noexcept {
        const double whole = std::floor(log2_magnitude);
        ScaledReal r = from_double(sign * std::exp2(log2_magnitude - whole));
        r.exp_ += static_cast<std::int64_t>(whole);
        return r;
    }

    double mantissa() const noexcept { return mant_; }
    std::int64_t exponent() const noexcept { return exp_; }
    bool is_zero() const noexcept { return mant_ == 0.0; }
    bool is_finite() const noexcept { return std::isfinite(mant_); }

    /// Rounds to double; overflows to +-inf, underflows through subnormals to 0.
    double to_double() const noexcept {
        if (mant_ == 0.0 || !std::isfinite(mant_)) return mant_;
        if (exp_ > 2000) return mant_ > 0 ? HUGE_VAL : -HUGE_VAL;
        if (exp_ < -2000) return mant_ > 0 ? 0.0 : -0.0;
        return std::ldexp(mant_, static_cast<int>(exp_));
    }

    ScaledReal abs() const noexcept {
        ScaledReal r = *this;
        r.mant_ = std::abs(r.mant_);
        return r;
    }

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) noexcept {
        ScaledReal r = from_double(a.mant_ * b.mant_);
        if (!r.is_zero()) r.exp_ += a.exp_ + b.exp_;
        return r;
    }

    friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) noexcept {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const ScaledReal& big = a.exp_ >= b.exp_ ? a : b;
        const ScaledReal& small = a.exp_ >= b.exp_ ? b : a;
        const std::int64_t shift = small.exp_ - big.exp_;
        const double aligned = shift < -1100 ? 0.0 : std::ldexp(small.mant_, static_cast<int>(shift));
        ScaledReal r = from_double(big.mant_ + aligned);
        if (!r.is_zero()) r.exp_ += big.exp_;
        return r;
    }

    ScaledReal& operator+=(const ScaledReal& o) noexcept { return *this = *this + o; }

    /// base^n by repeated squaring, exact for powers of two.
    static ScaledReal pow(ScaledReal base, std::uint64_t n) noexcept {
        ScaledReal acc = from_double(1.0);
        while (n > 0) {
            if (n & 1U) acc = acc * base;
            base = base * base;
            n >>= 1U;
        }
        return acc;
    }

private:
    double mant_ = 0.0;
    std::int64_t exp_ = 0;
};

}  // namespace fuzzybv
