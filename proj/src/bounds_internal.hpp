#pragma once

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "hhineq/bound_report.hpp"
#include "hhineq/errors.hpp"

namespace hhineq::bounds::detail {

/// Hölder conjugate p = q/(q-1) for q > 1.
inline double conjugate(double q) { return q / (q - 1.0); }

inline void require_q_above_one(double q, int theorem) {
    if (!(q > 1.0)) throw DomainError(fmt::format("theorem {} needs q > 1, got {}", theorem, q));
}

inline void require_q_at_least_one(double q, int theorem) {
    if (!(q >= 1.0)) throw DomainError(fmt::format("theorem {} needs q >= 1, got {}", theorem, q));
}

inline double positive_half_value(const HFunction& h, int theorem) {
    const double half = h.half_value();
    if (!(half > 0.0)) {
        throw DegenerateHError(fmt::format("theorem {}: h(1/2) = 0 for h '{}'", theorem, h.name()));
    }
    return half;
}

inline BoundReport start_report(int theorem, const FunctionSpec& fs, const HFunction& h, double a,
                                double b, std::optional<double> q) {
    require_interval(fs, a, b);
    if (!fs.has_second_derivative()) {
        throw CapabilityError(fmt::format("theorem {} needs f'' for '{}'", theorem, fs.id));
    }
    BoundReport r;
    r.theorem = fmt::format("T{}", theorem);
    r.function = fs.id;
    r.h = h.name();
    r.a = a;
    r.b = b;
    r.q = q;
    return r;
}

inline double abs_f2(const FunctionSpec& fs, double x) { return std::abs(fs.f2(x)); }

}  // namespace hhineq::bounds::detail
