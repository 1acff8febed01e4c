#include <cmath>

#include "bounds_internal.hpp"
#include "hhineq/bounds.hpp"
#include "hhineq/identities.hpp"

namespace hhineq::bounds {

using detail::abs_f2;

ExtendedReal m_weighted_h_integral(const HFunction& h, double tol) {
    // m has a kink at 1/2; integrate the two branches separately.
    const ExtendedReal lower = h_weighted_integral([&h](double t) { return t * t * h(t); }, 0.0, 0.5, tol);
    const ExtendedReal upper = h_weighted_integral(
        [&h](double t) { return (1.0 - t) * (1.0 - t) * h(t); }, 0.5, 1.0, tol);
    return lower + upper;
}

BoundReport theorem10_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            const BoundOptions& options) {
    BoundReport r = detail::start_report(10, fs, h, a, b, std::nullopt);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, 1.0, Curvature::convex, options);
    r.lhs = std::abs(identities::midpoint_gap(fs, a, b));

    const ExtendedReal weight = m_weighted_h_integral(h, options.quad_tol);
    if (weight.is_infinite()) {
        r.bound = ExtendedReal::infinity();
        r.notes.emplace_back(notes::kDivergentH);
    } else {
        const double w = b - a;
        r.bound = w * w * 0.5 * (abs_f2(fs, a) + abs_f2(fs, b)) * weight.value();
    }
    finalize(r, options.tol);
    return r;
}

BoundReport theorem11_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            double q, const BoundOptions& options) {
    detail::require_q_above_one(q, 11);
    BoundReport r = detail::start_report(11, fs, h, a, b, q);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, q, Curvature::convex, options);
    r.lhs = std::abs(identities::midpoint_gap(fs, a, b));

    const ExtendedReal h_int = h.integral01();
    if (h_int.is_infinite()) {
        r.bound = ExtendedReal::infinity();
        r.notes.emplace_back(notes::kDivergentH);
    } else {
        const double p = detail::conjugate(q);
        const double w = b - a;
        const double sum_q = std::pow(abs_f2(fs, a), q) + std::pow(abs_f2(fs, b), q);
        r.bound = w * w / 8.0 * std::pow(1.0 / (2.0 * p + 1.0), 1.0 / p) *
                  std::pow(sum_q * h_int.value(), 1.0 / q);
    }
    finalize(r, options.tol);
    return r;
}

BoundReport theorem12_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            double q, const BoundOptions& options) {
    detail::require_q_at_least_one(q, 12);
    BoundReport r = detail::start_report(12, fs, h, a, b, q);
    r.notes.emplace_back(notes::kEq14ExponentInserted);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, q, Curvature::convex, options);
    r.lhs = std::abs(identities::midpoint_gap(fs, a, b));

    const ExtendedReal weight = m_weighted_h_integral(h, options.quad_tol);
    if (weight.is_infinite()) {
        r.bound = ExtendedReal::infinity();
        r.notes.emplace_back(notes::kDivergentH);
    } else {
        const double inv_p = 1.0 - 1.0 / q;
        const double w = b - a;
        const double sum_q = std::pow(abs_f2(fs, a), q) + std::pow(abs_f2(fs, b), q);
        r.bound = w * w / 2.0 * std::pow(1.0 / 12.0, inv_p) * std::pow(sum_q * weight.value(), 1.0 / q);
    }
    finalize(r, options.tol);
    return r;
}

BoundReport theorem13_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            double q, const BoundOptions& options) {
    detail::require_q_above_one(q, 13);
    BoundReport r = detail::start_report(13, fs, h, a, b, q);
    r.notes.emplace_back(notes::kThm13PReadAsQ);
    const double half = detail::positive_half_value(h, 13);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, q, Curvature::concave, options);
    r.lhs = std::abs(identities::midpoint_gap(fs, a, b));

    const double p = detail::conjugate(q);
    const double w = b - a;
    r.bound = w * w / 4.0 * std::pow(1.0 / (2.0 * p + 1.0), 1.0 / p) *
              std::pow(1.0 / (2.0 * half), 1.0 / q) * abs_f2(fs, 0.5 * (a + b));
    finalize(r, options.tol);
    return r;
}

}  // namespace hhineq::bounds
