#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace hhineq {

using RealFn = std::function<double(double)>;

/// Which side of the defining inequality a class check uses.
enum class Curvature { convex, concave };

std::string_view to_string(Curvature c);

/// A closed or half-open real interval. Corpus domains such as (0, inf)
/// set the open flags; working intervals [a, b] are closed.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool lo_open = false;
    bool hi_open = false;

    double width() const noexcept { return hi - lo; }
    double midpoint() const noexcept { return 0.5 * (lo + hi); }

    bool contains(double x) const noexcept {
        const bool above = lo_open ? x > lo : x >= lo;
        const bool below = hi_open ? x < hi : x <= hi;
        return above && below;
    }

    bool contains(const Interval& inner) const noexcept {
        return contains(inner.lo) && contains(inner.hi);
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace hhineq
