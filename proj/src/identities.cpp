#include "hhineq/identities.hpp"

#include <cmath>

#include <fmt/format.h>

#include "hhineq/errors.hpp"
#include "hhineq/quadrature.hpp"

namespace hhineq::identities {

double integral_mean(const FunctionSpec& fs, double a, double b) {
    require_interval(fs, a, b);
    return quadrature::integrate(fs.f, a, b, kMeanTol).value / (b - a);
}

double trapezoid_gap(const FunctionSpec& fs, double a, double b) {
    const double mean = integral_mean(fs, a, b);
    return 0.5 * (fs(a) + fs(b)) - mean;
}

double midpoint_gap(const FunctionSpec& fs, double a, double b) {
    const double mean = integral_mean(fs, a, b);
    return mean - fs(0.5 * (a + b));
}

double gap(GapKind kind, const FunctionSpec& fs, double a, double b) {
    return kind == GapKind::trapezoid ? trapezoid_gap(fs, a, b) : midpoint_gap(fs, a, b);
}

double m_weight(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError(fmt::format("m_weight: t = {} outside [0, 1]", t));
    return t < 0.5 ? t * t : (1.0 - t) * (1.0 - t);
}

double lemma1_rhs(const FunctionSpec& fs, double a, double b) {
    require_interval(fs, a, b);
    if (!fs.has_second_derivative()) {
        throw CapabilityError("lemma 1 needs f'' for '" + fs.id + "'");
    }
    const auto integrand = [&](double t) {
        const double u = 0.5 * (1.0 + t);
        const double v = 0.5 * (1.0 - t);
        return (1.0 - t * t) * (fs.f2(u * a + v * b) + fs.f2(v * a + u * b));
    };
    const double w = b - a;
    return w * w / 16.0 * quadrature::integrate(integrand, 0.0, 1.0, kMeanTol).value;
}

double lemma2_rhs(const FunctionSpec& fs, double a, double b) {
    require_interval(fs, a, b);
    if (!fs.has_second_derivative()) {
        throw CapabilityError("lemma 2 needs f'' for '" + fs.id + "'");
    }
    const auto bracket = [&](double t) {
        return fs.f2(t * a + (1.0 - t) * b) + fs.f2(t * b + (1.0 - t) * a);
    };
    const auto lower = [&](double t) { return t * t * bracket(t); };
    const auto upper = [&](double t) { return (1.0 - t) * (1.0 - t) * bracket(t); };
    const double integral = quadrature::integrate(lower, 0.0, 0.5, kMeanTol).value +
                            quadrature::integrate(upper, 0.5, 1.0, kMeanTol).value;
    const double w = b - a;
    return w * w / 4.0 * integral;
}

IdentityCheck verify_identity(int lemma, const FunctionSpec& fs, double a, double b, double tol) {
    IdentityCheck out;
    out.lemma = lemma;
    if (lemma == 1) {
        out.lhs = trapezoid_gap(fs, a, b);
        out.rhs = lemma1_rhs(fs, a, b);
    } else if (lemma == 2) {
        out.lhs = midpoint_gap(fs, a, b);
        out.rhs = lemma2_rhs(fs, a, b);
    } else {
        throw DomainError(fmt::format("unknown lemma {}", lemma));
    }
    out.delta = out.lhs - out.rhs;
    out.holds = std::abs(out.delta) <= tol;
    return out;
}

}  // namespace hhineq::identities
