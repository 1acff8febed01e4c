#include "hhineq/refinements.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hhineq/errors.hpp"
#include "hhineq/identities.hpp"
#include "hhineq/quadrature.hpp"

namespace hhineq::refinements {

namespace {

constexpr double kQuadTol = 1e-12;

double half_value_or_throw(const HFunction& h) {
    const double half = h.half_value();
    if (!(half > 0.0)) throw DegenerateHError("h(1/2) = 0 for h '" + h.name() + "'");
    return half;
}

// c * x for c >= 0, with 0 * inf taken as 0.
ExtendedReal scale(double c, const ExtendedReal& x) {
    if (c == 0.0) return 0.0;
    return c * x;
}

bool precondition(const FunctionSpec& fs, const HFunction& h, double a, double b,
                  const BoundOptions& options) {
    return function_in_class(fs, h, a, b, Curvature::convex, options);
}

}  // namespace

TripleReport theorem5_check(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            const BoundOptions& options) {
    require_interval(fs, a, b);
    const double half = half_value_or_throw(h);
    TripleReport out;
    out.precondition_ok = precondition(fs, h, a, b, options);
    out.lower = fs(0.5 * (a + b)) / (2.0 * half);
    out.middle = identities::integral_mean(fs, a, b);
    const ExtendedReal h_int = h.integral01();
    out.upper = h_int.is_infinite() ? ExtendedReal::infinity()
                                    : ExtendedReal((fs(a) + fs(b)) * h_int.value());
    out.left_holds = out.lower <= out.middle + options.tol;
    out.right_holds = out.upper.is_infinite() || out.middle <= out.upper.value() + options.tol;
    return out;
}

RefinedUpperReport refined_upper_check(const RealFn& f, const HFunction& h, double x, double y,
                                       double alpha, double beta_hi, double tol) {
    if (!(alpha >= 0.0 && alpha < beta_hi && beta_hi <= 1.0)) {
        throw DomainError(
            fmt::format("refined_upper_check: need 0 <= alpha < beta_hi <= 1, got [{}, {}]", alpha,
                        beta_hi));
    }
    RefinedUpperReport out;
    out.lhs = quadrature::integrate([&](double t) { return f(t * x + (1.0 - t) * y); }, alpha,
                                    beta_hi, kQuadTol)
                  .value;
    const ExtendedReal h_part =
        h_weighted_integral([&h](double t) { return h(t); }, alpha, beta_hi, kQuadTol);
    const ExtendedReal h_mirror =
        h_weighted_integral([&h](double t) { return h(1.0 - t); }, alpha, beta_hi, kQuadTol);
    const double fx = f(x);
    const double fy = f(y);
    out.rhs = scale(fx, h_part) + scale(fy, h_mirror);
    out.holds = out.rhs.is_infinite() || out.lhs <= out.rhs.value() + tol;
    out.classic_upper = scale(fx + fy, h.integral01());
    out.within_classic = out.classic_upper.is_infinite() ||
                         (out.rhs.is_finite() && out.rhs.value() <= out.classic_upper.value() + tol);
    return out;
}

RefinementReport theorem15_refinement(const FunctionSpec& fs, const HFunction& h, double a,
                                      double b, const BoundOptions& options) {
    require_interval(fs, a, b);
    const double half = half_value_or_throw(h);
    RefinementReport out;
    out.precondition_ok = precondition(fs, h, a, b, options);

    const double factor = 2.0 * half / (b - a);
    const double fm = fs(0.5 * (a + b));
    const double integral = quadrature::integrate(fs.f, a, b, kQuadTol).value;
    const double symmetric = quadrature::integrate(
        [&](double x) { return 0.5 * std::abs(fs(x) + fs(a + b - x)); }, a, b, kQuadTol)
                                 .value;
    const double outer = factor * integral - fm;
    const double inner = std::abs(factor * symmetric - std::abs(fm));
    out.outer = outer;
    out.inner = inner;
    out.holds = outer >= inner - options.tol && inner >= -options.tol;
    return out;
}

RefinementReport theorem16_refinement(const FunctionSpec& fs, const HFunction& h, double a,
                                      double b, const BoundOptions& options) {
    require_interval(fs, a, b);
    RefinementReport out;
    out.precondition_ok = precondition(fs, h, a, b, options);

    const ExtendedReal h_int = h.integral01();
    if (h_int.is_infinite()) {
        out.outer = ExtendedReal::infinity();
        out.inner = ExtendedReal::infinity();
        out.holds = true;
        return out;
    }
    const double fa = fs(a);
    const double fb = fs(b);
    const auto along = [&](double t) { return fs(t * a + (1.0 - t) * b); };
    const double segment_mean = quadrature::integrate(along, 0.0, 1.0, kQuadTol).value;
    const double segment_abs_mean =
        quadrature::integrate([&](double t) { return std::abs(along(t)); }, 0.0, 1.0, kQuadTol)
            .value;
    const ExtendedReal weighted_abs = h_weighted_integral(
        [&](double t) { return std::abs(h(t) * fa + h(1.0 - t) * fb); }, 0.0, 1.0, kQuadTol);

    // int_0^1 h(1-t) dt equals int_0^1 h(t) dt.
    const double outer = fa * h_int.value() + fb * h_int.value() - segment_mean;
    out.outer = outer;
    if (weighted_abs.is_infinite()) {
        out.inner = ExtendedReal::infinity();
        out.holds = false;
        return out;
    }
    const double inner = std::abs(weighted_abs.value() - segment_abs_mean);
    out.inner = inner;
    out.holds = outer >= inner - options.tol && inner >= -options.tol;
    return out;
}

}  // namespace hhineq::refinements
