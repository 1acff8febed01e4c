#include "hhineq/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <fmt/format.h>

#include "hhineq/errors.hpp"

namespace hhineq::quadrature {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kronrod abscissae; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    double resabs;
    int depth;
};

struct ByError {
    bool operator()(const Segment& l, const Segment& r) const { return l.error < r.error; }
};

double sample(const RealFn& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y)) {
        throw EvaluationError(fmt::format("integrand is not finite at x = {:.17g}", x), x);
    }
    return y;
}

Segment gauss_kronrod15(const RealFn& f, double a, double b, int depth, std::size_t& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = sample(f, center);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];
    double resabs = std::abs(result_kronrod);
    std::array<double, 7> fv1{};
    std::array<double, 7> fv2{};
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = sample(f, center - dx);
        fv2[j] = sample(f, center + dx);
        const double pair = fv1[j] + fv2[j];
        result_kronrod += kWgk[j] * pair;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) result_gauss += kWg[j / 2] * pair;
    }
    evals += 15;

    const double mean = 0.5 * result_kronrod;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (std::size_t j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    }

    const double scale = std::abs(half);
    double error = std::abs((result_kronrod - result_gauss) * half);
    resasc *= scale;
    resabs *= scale;
    if (resasc != 0.0 && error != 0.0) {
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    }
    if (resabs > kTiny / (50.0 * kEps)) error = std::max(50.0 * kEps * resabs, error);
    return Segment{a, b, result_kronrod * half, error, resabs, depth};
}

QuadResult adaptive(const RealFn& f, double a, double b, double abs_tol, double rel_tol) {
    QuadResult out;
    if (a == b) return out;

    std::priority_queue<Segment, std::vector<Segment>, ByError> active;
    std::vector<Segment> frozen;
    active.push(gauss_kronrod15(f, a, b, 0, out.evaluations));
    double total = active.top().value;
    double total_error = active.top().error;
    double total_resabs = active.top().resabs;

    std::size_t segments = 1;
    while (!active.empty() && segments < kMaxSubintervals) {
        if (total_error <= std::max(abs_tol, rel_tol * std::abs(total))) break;
        // Round-off limited: further bisection cannot shrink the estimate.
        if (total_error <= 100.0 * kEps * total_resabs) break;

        Segment worst = active.top();
        active.pop();
        if (worst.depth >= kMaxDepth) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gauss_kronrod15(f, worst.a, mid, worst.depth + 1, out.evaluations);
        Segment right = gauss_kronrod15(f, mid, worst.b, worst.depth + 1, out.evaluations);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        total_resabs += left.resabs + right.resabs - worst.resabs;
        active.push(left);
        active.push(right);
        ++segments;
    }

    // Re-sum to shed the drift of the running updates.
    total = 0.0;
    total_error = 0.0;
    for (const auto& s : frozen) {
        total += s.value;
        total_error += s.error;
    }
    while (!active.empty()) {
        total += active.top().value;
        total_error += active.top().error;
        active.pop();
    }
    out.value = total;
    out.error_estimate = total_error;
    return out;
}

void check_tolerance(double tol) {
    if (!(tol > 0.0)) throw DomainError("quadrature: tolerance must be positive");
}

constexpr int kMaxPanels = 1100;
constexpr int kMinPanelsBeforeDivergence = 40;
constexpr int kStallRun = 3;
constexpr double kStallRatio = 0.999;

// Sums panels [e + w 2^-(k+1), e + w 2^-k] for k = 0, 1, ... where w = inner - e.
QuadResult graded_toward(const RealFn& f, double endpoint, double inner, double tol) {
    QuadResult out;
    const double width = inner - endpoint;
    const double panel_abs_tol = 0.01 * tol;
    const double panel_rel_tol = 0.1 * tol;

    double previous = 0.0;
    double last_ratio = std::numeric_limits<double>::quiet_NaN();
    int stalled = 0;
    bool converged = false;

    for (int k = 0; k < kMaxPanels; ++k) {
        const double outer_pt = endpoint + std::ldexp(width, -k);
        const double inner_pt = endpoint + std::ldexp(width, -(k + 1));
        if (inner_pt == endpoint || inner_pt == outer_pt) break;

        const double lo = std::min(inner_pt, outer_pt);
        const double hi = std::max(inner_pt, outer_pt);
        const QuadResult panel = adaptive(f, lo, hi, panel_abs_tol, panel_rel_tol);
        out.evaluations += panel.evaluations;
        out.value += panel.value;
        out.error_estimate += panel.error_estimate;
        if (!std::isfinite(out.value)) {
            throw DivergenceError("integrate_open: partial sums overflow", endpoint);
        }

        const double current = panel.value;
        if (k >= 1) {
            if (previous == 0.0 && current == 0.0) {
                if (k >= kStallRun) {
                    converged = true;
                    break;
                }
                previous = current;
                continue;
            }
            last_ratio = previous == 0.0 ? std::numeric_limits<double>::infinity()
                                         : std::abs(current / previous);
            stalled = last_ratio >= kStallRatio ? stalled + 1 : 0;
            if (k >= kMinPanelsBeforeDivergence && stalled >= kStallRun) {
                throw DivergenceError(
                    fmt::format("integrate_open: panel contributions do not decay toward "
                                "{:.17g}",
                                endpoint),
                    endpoint);
            }
        }
        previous = current;

        if (k >= 3 && last_ratio < kStallRatio) {
            const double tail = current * last_ratio / (1.0 - last_ratio);
            if (std::abs(tail) <= 0.25 * std::max(tol, tol * std::abs(out.value))) {
                out.value += tail;
                out.error_estimate += std::abs(tail);
                converged = true;
                break;
            }
        }
    }

    if (!converged) {
        // Panels exhausted (the endpoint can no longer be approached in double).
        if (!(last_ratio < kStallRatio)) {
            throw DivergenceError("integrate_open: panel contributions do not decay", endpoint);
        }
        const double tail = previous * last_ratio / (1.0 - last_ratio);
        out.value += tail;
        out.error_estimate += std::abs(tail);
    }
    return out;
}

}  // namespace

QuadResult integrate(const RealFn& f, double a, double b, double tol) {
    check_tolerance(tol);
    if (!(a <= b)) throw DomainError("integrate: requires a <= b");
    return adaptive(f, a, b, tol, tol);
}

QuadResult integrate_open(const RealFn& f, double a, double b, double tol) {
    check_tolerance(tol);
    if (!(a < b)) throw DomainError("integrate_open: requires a < b");
    const double mid = 0.5 * (a + b);
    const QuadResult left = graded_toward(f, a, mid, tol);
    const QuadResult right = graded_toward(f, b, mid, tol);
    return QuadResult{left.value + right.value, left.error_estimate + right.error_estimate,
                      left.evaluations + right.evaluations};
}

ExtendedReal integrate_extended(const RealFn& f, double a, double b, double tol) {
    try {
        return integrate_open(f, a, b, tol).value;
    } catch (const DivergenceError&) {
        return ExtendedReal::infinity();
    }
}

}  // namespace hhineq::quadrature
