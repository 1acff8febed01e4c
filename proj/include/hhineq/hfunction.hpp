#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hhineq/extended_real.hpp"
#include "hhineq/types.hpp"

namespace hhineq {

enum class HKind { identity, constant_one, reciprocal, power, custom };

/// A non-negative weight h on (0, 1), not identically zero.
///
/// Built-in kinds: identity h(t) = t (ordinary convexity), constant_one
/// h(t) = 1 (P-convexity), reciprocal h(t) = 1/t (Godunova-Levin class),
/// power h(t) = t^s with s in (0, 1) (s-convexity in the second sense).
/// Custom weights wrap an arbitrary evaluator; their integral over (0, 1) is
/// computed once with the open quadrature rule.
class HFunction {
public:
    static HFunction identity();
    static HFunction constant_one();
    static HFunction reciprocal();
    static HFunction power(double s);
    static HFunction custom(std::string name, RealFn evaluator);

    HKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    /// The exponent s of a power kind; 0 for other kinds.
    double exponent() const noexcept { return exponent_; }

    /// h(t) for 0 < t < 1.
    double operator()(double t) const;

    /// Integral of h over (0, 1); +inf for reciprocal.
    const ExtendedReal& integral01() const noexcept { return integral01_; }
    double half_value() const noexcept { return half_value_; }

private:
    friend double h_eval(const HFunction& h, double t);

    HFunction(HKind kind, std::string name, double exponent, RealFn evaluator);

    HKind kind_;
    std::string name_;
    double exponent_ = 0.0;
    RealFn evaluator_;
    ExtendedReal integral01_;
    double half_value_ = 0.0;
};

/// h(t); DomainError outside (0, 1), InvalidHError on a negative custom value.
double h_eval(const HFunction& h, double t);

ExtendedReal h_integral01(const HFunction& h);

/// Parses "identity", "constant-one", "reciprocal", "power:S" or "power(S)".
HFunction parse_h(std::string_view text);

/// Integral of g over (lo, hi) where g involves h; the open rule keeps h
/// away from 0 and 1, and divergence maps to +inf.
ExtendedReal h_weighted_integral(const RealFn& g, double lo, double hi, double tol);

struct Witness {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
};

struct MembershipReport {
    bool holds = false;
    double max_violation = 0.0;
    double tolerance = 0.0;
    std::optional<Witness> witness;
};

struct MembershipOptions {
    int grid = 33;
    /// Absolute tolerance; when unset, 1e-9 * (1 + max |f| on the grid).
    std::optional<double> tol;
    /// t ranges over [t_margin, 1 - t_margin].
    double t_margin = 1e-3;
};

/// Evaluates f(tx + (1-t)y) - h(t) f(x) - h(1-t) f(y) on a grid^3 tensor grid
/// over interval x interval x [margin, 1 - margin] and reports the worst
/// violation of the convex (<=) or concave (>=) form.
///
/// Throws PreconditionError at the first sample where f < 0.
MembershipReport check_h_class(const RealFn& f, const HFunction& h, const Interval& interval,
                               Curvature curvature, const MembershipOptions& options = {});

inline MembershipReport check_h_convex(const RealFn& f, const HFunction& h,
                                       const Interval& interval,
                                       const MembershipOptions& options = {}) {
    return check_h_class(f, h, interval, Curvature::convex, options);
}

inline MembershipReport check_h_concave(const RealFn& f, const HFunction& h,
                                        const Interval& interval,
                                        const MembershipOptions& options = {}) {
    return check_h_class(f, h, interval, Curvature::concave, options);
}

}  // namespace hhineq
