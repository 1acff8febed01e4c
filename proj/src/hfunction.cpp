#include "hhineq/hfunction.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "hhineq/errors.hpp"
#include "hhineq/quadrature.hpp"

namespace hhineq {

std::string_view to_string(Curvature c) {
    return c == Curvature::convex ? "convex" : "concave";
}

namespace {

constexpr double kCustomIntegralTol = 1e-10;

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ConfigError(fmt::format("not a number: '{}'", text));
    }
    return value;
}

}  // namespace

HFunction::HFunction(HKind kind, std::string name, double exponent, RealFn evaluator)
    : kind_(kind), name_(std::move(name)), exponent_(exponent), evaluator_(std::move(evaluator)) {
    switch (kind_) {
        case HKind::identity:
            integral01_ = 0.5;
            break;
        case HKind::constant_one:
            integral01_ = 1.0;
            break;
        case HKind::reciprocal:
            integral01_ = ExtendedReal::infinity();
            break;
        case HKind::power:
            integral01_ = 1.0 / (exponent_ + 1.0);
            break;
        case HKind::custom:
            integral01_ = quadrature::integrate_extended([this](double t) { return h_eval(*this, t); },
                                                         0.0, 1.0, kCustomIntegralTol);
            if (integral01_.is_finite() && integral01_.value() == 0.0) {
                throw InvalidHError("custom h '" + name_ + "' is identically zero");
            }
            break;
    }
    half_value_ = h_eval(*this, 0.5);
}

HFunction HFunction::identity() {
    return HFunction(HKind::identity, "identity", 0.0, [](double t) { return t; });
}

HFunction HFunction::constant_one() {
    return HFunction(HKind::constant_one, "constant-one", 0.0, [](double) { return 1.0; });
}

HFunction HFunction::reciprocal() {
    return HFunction(HKind::reciprocal, "reciprocal", 0.0, [](double t) { return 1.0 / t; });
}

HFunction HFunction::power(double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw DomainError(fmt::format("power h requires s in (0, 1), got {}", s));
    }
    return HFunction(HKind::power, fmt::format("power:{}", s), s,
                     [s](double t) { return std::pow(t, s); });
}

HFunction HFunction::custom(std::string name, RealFn evaluator) {
    if (!evaluator) throw InvalidHError("custom h needs an evaluator");
    return HFunction(HKind::custom, std::move(name), 0.0, std::move(evaluator));
}

double HFunction::operator()(double t) const { return h_eval(*this, t); }

double h_eval(const HFunction& h, double t) {
    if (!(t > 0.0 && t < 1.0)) {
        throw DomainError(fmt::format("h '{}' evaluated outside (0, 1) at t = {}", h.name(), t));
    }
    const double v = h.evaluator_(t);
    if (!(v >= 0.0)) {
        throw InvalidHError(
            fmt::format("h '{}' is negative or undefined at t = {}: {}", h.name(), t, v));
    }
    return v;
}

ExtendedReal h_integral01(const HFunction& h) { return h.integral01(); }

HFunction parse_h(std::string_view text) {
    if (text == "identity" || text == "t") return HFunction::identity();
    if (text == "constant-one" || text == "one") return HFunction::constant_one();
    if (text == "reciprocal") return HFunction::reciprocal();
    if (text.starts_with("power:")) return HFunction::power(parse_double(text.substr(6)));
    if (text.starts_with("power(") && text.ends_with(")")) {
        return HFunction::power(parse_double(text.substr(6, text.size() - 7)));
    }
    throw ConfigError(fmt::format("unknown h kind '{}'", text));
}

ExtendedReal h_weighted_integral(const RealFn& g, double lo, double hi, double tol) {
    return quadrature::integrate_extended(g, lo, hi, tol);
}

MembershipReport check_h_class(const RealFn& f, const HFunction& h, const Interval& interval,
                               Curvature curvature, const MembershipOptions& options) {
    if (options.grid < 3) throw DomainError("check_h_class: grid needs at least 3 points");
    if (!(interval.lo < interval.hi)) throw DomainError("check_h_class: empty interval");
    if (!(options.t_margin > 0.0 && options.t_margin < 0.5)) {
        throw DomainError("check_h_class: t margin must lie in (0, 1/2)");
    }

    const auto n = static_cast<std::size_t>(options.grid);
    const double step = interval.width() / static_cast<double>(n - 1);
    const double t_step = (1.0 - 2.0 * options.t_margin) / static_cast<double>(n - 1);

    auto checked = [&f](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            throw EvaluationError(fmt::format("f is not finite at x = {:.17g}", x), x);
        }
        if (v < 0.0) {
            throw PreconditionError(
                fmt::format("f is negative at x = {:.17g} (f = {:.17g}); h-convexity needs f >= 0",
                            x, v),
                x);
        }
        return v;
    };

    std::vector<double> xs(n);
    std::vector<double> fx(n);
    std::vector<double> ts(n);
    std::vector<double> ht(n);
    std::vector<double> h1t(n);
    double max_abs_f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = i + 1 == n ? interval.hi : interval.lo + step * static_cast<double>(i);
        fx[i] = checked(xs[i]);
        max_abs_f = std::max(max_abs_f, fx[i]);
        ts[i] = options.t_margin + t_step * static_cast<double>(i);
        ht[i] = h_eval(h, ts[i]);
        h1t[i] = h_eval(h, 1.0 - ts[i]);
    }

    const double sign = curvature == Curvature::convex ? 1.0 : -1.0;
    double worst = -std::numeric_limits<double>::infinity();
    Witness worst_at;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const double t = ts[k];
                const double z = std::clamp(t * xs[i] + (1.0 - t) * xs[j], interval.lo, interval.hi);
                const double fz = checked(z);
                max_abs_f = std::max(max_abs_f, fz);
                const double violation = sign * (fz - ht[k] * fx[i] - h1t[k] * fx[j]);
                if (violation > worst) {
                    worst = violation;
                    worst_at = Witness{xs[i], xs[j], t};
                }
            }
        }
    }

    MembershipReport report;
    report.tolerance = options.tol.value_or(1e-9 * (1.0 + max_abs_f));
    report.max_violation = worst;
    report.holds = worst <= report.tolerance;
    if (!report.holds) report.witness = worst_at;
    return report;
}

}  // namespace hhineq
