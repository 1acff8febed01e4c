#pragma once

#include <cmath>
#include <compare>
#include <limits>

#include "hhineq/errors.hpp"

namespace hhineq {

/// A real number or +inf. Used for bounds that become vacuous when the
/// weight integral of h diverges.
class ExtendedReal {
public:
    constexpr ExtendedReal() = default;
    constexpr ExtendedReal(double v) : value_(v) {}  // NOLINT(implicit)

    static constexpr ExtendedReal infinity() {
        ExtendedReal r;
        r.infinite_ = true;
        return r;
    }

    constexpr bool is_finite() const noexcept { return !infinite_; }
    constexpr bool is_infinite() const noexcept { return infinite_; }

    /// The finite value; throws when infinite.
    double value() const {
        if (infinite_) throw DomainError("ExtendedReal: value() on +inf");
        return value_;
    }

    /// The value as a double, with +inf mapped to HUGE_VAL.
    double as_double() const noexcept {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    friend constexpr std::partial_ordering operator<=>(const ExtendedReal& l,
                                                       const ExtendedReal& r) {
        if (l.infinite_ && r.infinite_) return std::partial_ordering::equivalent;
        if (l.infinite_) return std::partial_ordering::greater;
        if (r.infinite_) return std::partial_ordering::less;
        return l.value_ <=> r.value_;
    }
    friend constexpr bool operator==(const ExtendedReal& l, const ExtendedReal& r) {
        return (l <=> r) == std::partial_ordering::equivalent;
    }

    friend ExtendedReal operator+(const ExtendedReal& l, const ExtendedReal& r) {
        if (l.infinite_ || r.infinite_) return infinity();
        return l.value_ + r.value_;
    }

    /// Subtracting a finite value; +inf stays +inf.
    friend ExtendedReal operator-(const ExtendedReal& l, double r) {
        if (l.infinite_) return infinity();
        return l.value_ - r;
    }

    /// Positive scaling. +inf absorbs any c > 0; 0 * inf is left to callers.
    friend ExtendedReal operator*(double c, const ExtendedReal& r) {
        if (r.infinite_) {
            if (!(c > 0.0)) throw DomainError("ExtendedReal: non-positive scale of +inf");
            return infinity();
        }
        return c * r.value_;
    }
    friend ExtendedReal operator*(const ExtendedReal& r, double c) { return c * r; }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

/// x^e for e > 0; +inf stays +inf.
inline ExtendedReal pow(const ExtendedReal& x, double e) {
    if (x.is_infinite()) {
        if (!(e > 0.0)) throw DomainError("ExtendedReal: pow(+inf, e) needs e > 0");
        return ExtendedReal::infinity();
    }
    return std::pow(x.value(), e);
}

}  // namespace hhineq
