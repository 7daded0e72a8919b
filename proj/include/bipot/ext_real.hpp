#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace bipot {

/// Element of the extended real line R ∪ {+∞}.
///
/// +∞ is a distinguished state rather than an IEEE infinity, so products of the
/// form 0·(+∞) cannot be produced silently: scaling is only defined for
/// strictly positive factors on infinite values. NaN is rejected at
/// construction.
class ExtReal {
public:
    constexpr ExtReal() = default;

    ExtReal(double v) : value_(v) {  // NOLINT: implicit from finite reals
        if (std::isnan(v)) throw std::domain_error("ExtReal: NaN is not an extended real");
        if (std::isinf(v)) {
            if (v < 0) throw std::domain_error("ExtReal: -inf is not admitted");
            infinite_ = true;
            value_ = 0.0;
        }
    }

    static ExtReal infinity() {
        ExtReal r;
        r.infinite_ = true;
        return r;
    }

    bool is_finite() const { return !infinite_; }
    bool is_infinite() const { return infinite_; }

    /// Finite value; throws on +∞.
    double value() const {
        if (infinite_) throw std::domain_error("ExtReal: value() of +inf");
        return value_;
    }

    /// Finite value, or IEEE +inf. Only for reporting and numeric reductions.
    double to_double() const { return infinite_ ? HUGE_VAL : value_; }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtReal(a.value_ + b.value_);
    }
    friend ExtReal operator+(ExtReal a, double b) { return a + ExtReal(b); }
    friend ExtReal operator+(double a, ExtReal b) { return ExtReal(a) + b; }

    /// a - r for finite r.
    friend ExtReal operator-(ExtReal a, double r) {
        if (a.infinite_) return infinity();
        return ExtReal(a.value_ - r);
    }

    /// Scaling by a real factor. 0·(+∞) and negative·(+∞) are rejected.
    friend ExtReal operator*(double s, ExtReal a) {
        if (a.infinite_) {
            if (!(s > 0.0)) throw std::domain_error("ExtReal: product of +inf with a non-positive factor");
            return infinity();
        }
        return ExtReal(s * a.value_);
    }

    friend bool operator==(ExtReal a, ExtReal b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }

    friend std::partial_ordering operator<=>(ExtReal a, ExtReal b) {
        if (a.infinite_ && b.infinite_) return std::partial_ordering::equivalent;
        if (a.infinite_) return std::partial_ordering::greater;
        if (b.infinite_) return std::partial_ordering::less;
        return a.value_ <=> b.value_;
    }

    friend ExtReal min(ExtReal a, ExtReal b) { return (b < a) ? b : a; }

    /// Shortest round-trip decimal for finite values, "inf" otherwise.
    std::string to_string() const;

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

}  // namespace bipot
