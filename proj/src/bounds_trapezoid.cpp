#include <cmath>

#include "bounds_internal.hpp"
#include "hhineq/bounds.hpp"
#include "hhineq/identities.hpp"
#include "hhineq/specialfn.hpp"

namespace hhineq::bounds {

using detail::abs_f2;

BoundReport theorem6_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           const BoundOptions& options) {
    BoundReport r = detail::start_report(6, fs, h, a, b, std::nullopt);
    r.notes.emplace_back(notes::kEq8FinalLine);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, 1.0, Curvature::convex, options);
    r.lhs = std::abs(identities::trapezoid_gap(fs, a, b));

    const double half = h.half_value();
    const ExtendedReal weight = h_weighted_integral(
        [&h, half](double t) { return (1.0 - t * t) * (h(t) + 2.0 * half * h(1.0 - t)); }, 0.0, 1.0,
        options.quad_tol);
    const double w = b - a;
    if (weight.is_infinite()) {
        r.bound = ExtendedReal::infinity();
        r.notes.emplace_back(notes::kDivergentH);
    } else {
        r.bound = w * w / 16.0 * (abs_f2(fs, a) + abs_f2(fs, b)) * weight.value();
    }
    finalize(r, options.tol);
    return r;
}

BoundReport theorem7_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           double q, const BoundOptions& options) {
    detail::require_q_above_one(q, 7);
    BoundReport r = detail::start_report(7, fs, h, a, b, q);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, q, Curvature::convex, options);
    r.lhs = std::abs(identities::trapezoid_gap(fs, a, b));

    const ExtendedReal h_int = h.integral01();
    if (h_int.is_infinite()) {
        r.bound = ExtendedReal::infinity();
        r.notes.emplace_back(notes::kDivergentH);
        finalize(r, options.tol);
        return r;
    }
    const double p = detail::conjugate(q);
    const double w = b - a;
    const double aq = std::pow(abs_f2(fs, a), q);
    const double bq = std::pow(abs_f2(fs, b), q);
    const double mq = std::pow(abs_f2(fs, 0.5 * (a + b)), q);
    const double bracket = std::pow(aq + mq, 1.0 / q) + std::pow(bq + mq, 1.0 / q);
    r.bound = w * w / (16.0 * std::pow(2.0, 1.0 / p)) *
              std::pow(specialfn::beta(0.5, p + 1.0), 1.0 / p) *
              std::pow(h_int.value(), 1.0 / q) * bracket;
    finalize(r, options.tol);
    return r;
}

BoundReport theorem8_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           double q, const BoundOptions& options) {
    detail::require_q_at_least_one(q, 8);
    BoundReport r = detail::start_report(8, fs, h, a, b, q);
    if (q == 1.0) r.notes.emplace_back(notes::kThm8Q1Continuity);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, q, Curvature::convex, options);
    r.lhs = std::abs(identities::trapezoid_gap(fs, a, b));

    const double aq = std::pow(abs_f2(fs, a), q);
    const double bq = std::pow(abs_f2(fs, b), q);
    const double mq = std::pow(abs_f2(fs, 0.5 * (a + b)), q);
    const auto side = [&](double endpoint_q) {
        return h_weighted_integral(
            [&h, endpoint_q, mq](double t) {
                return ((1.0 - t * t) * endpoint_q + t * (2.0 - t) * mq) * h(t);
            },
            0.0, 1.0, options.quad_tol);
    };
    const ExtendedReal left = side(aq);
    const ExtendedReal right = side(bq);
    if (left.is_infinite() || right.is_infinite()) {
        r.bound = ExtendedReal::infinity();
        r.notes.emplace_back(notes::kDivergentH);
    } else {
        // 1/p := 1 - 1/q, so the power-mean factor is 1 at q = 1.
        const double inv_p = 1.0 - 1.0 / q;
        const double w = b - a;
        r.bound = w * w / 16.0 * std::pow(2.0 / 3.0, inv_p) *
                  (std::pow(left.value(), 1.0 / q) + std::pow(right.value(), 1.0 / q));
    }
    finalize(r, options.tol);
    return r;
}

BoundReport theorem9_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           double q, const BoundOptions& options) {
    detail::require_q_above_one(q, 9);
    BoundReport r = detail::start_report(9, fs, h, a, b, q);
    r.notes.emplace_back(notes::kThm9QGreaterThanOne);
    const double half = detail::positive_half_value(h, 9);
    r.precondition_ok = second_derivative_in_class(fs, h, a, b, q, Curvature::concave, options);
    r.lhs = std::abs(identities::trapezoid_gap(fs, a, b));

    const double p = detail::conjugate(q);
    const double w = b - a;
    const double quarter_points = abs_f2(fs, (a + 3.0 * b) / 4.0) + abs_f2(fs, (3.0 * a + b) / 4.0);
    r.bound = w * w / 32.0 * std::pow(specialfn::beta(0.5, p + 1.0), 1.0 / p) *
              std::pow(1.0 / half, 1.0 / q) * quarter_points;
    finalize(r, options.tol);
    return r;
}

BoundReport evaluate_bound(int theorem, const FunctionSpec& fs, const HFunction& h, double a,
                           double b, double q, const BoundOptions& options) {
    switch (theorem) {
        case 6: return theorem6_bound(fs, h, a, b, options);
        case 7: return theorem7_bound(fs, h, a, b, q, options);
        case 8: return theorem8_bound(fs, h, a, b, q, options);
        case 9: return theorem9_bound(fs, h, a, b, q, options);
        case 10: return theorem10_bound(fs, h, a, b, options);
        case 11: return theorem11_bound(fs, h, a, b, q, options);
        case 12: return theorem12_bound(fs, h, a, b, q, options);
        case 13: return theorem13_bound(fs, h, a, b, q, options);
        default: throw DomainError(fmt::format("no bound evaluator for theorem {}", theorem));
    }
}

}  // namespace hhineq::bounds
