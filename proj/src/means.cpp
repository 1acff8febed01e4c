#include "hhineq/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "hhineq/bounds.hpp"
#include "hhineq/corpus.hpp"
#include "hhineq/errors.hpp"
#include "hhineq/specialfn.hpp"

namespace hhineq::means {

namespace {

// Below this relative separation the closed forms lose every digit to 0/0;
// second-order expansions about A take over.
constexpr double kNearEqual = 1e-8;

void require_positive(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError(fmt::format("means need positive arguments, got ({}, {})", a, b));
    }
}

bool near_equal(double a, double b) { return std::abs(b - a) < kNearEqual * std::min(a, b); }

// eps = (b - a)/(b + a), so a = A(1 - eps), b = A(1 + eps).
double half_spread(double a, double b) { return (b - a) / (b + a); }

}  // namespace

double arithmetic(double a, double b) {
    require_positive(a, b);
    return 0.5 * (a + b);
}

double geometric(double a, double b) {
    require_positive(a, b);
    return std::sqrt(a) * std::sqrt(b);
}

double harmonic(double a, double b) {
    require_positive(a, b);
    return 2.0 * a * b / (a + b);
}

double logarithmic(double a, double b) {
    require_positive(a, b);
    if (a == b) return a;
    if (near_equal(a, b)) {
        const double eps = half_spread(a, b);
        return 0.5 * (a + b) * (1.0 - eps * eps / 3.0);
    }
    return (b - a) / std::log1p((b - a) / a);
}

double identric(double a, double b) {
    require_positive(a, b);
    if (a == b) return a;
    if (near_equal(a, b)) {
        const double eps = half_spread(a, b);
        return 0.5 * (a + b) * (1.0 - eps * eps / 6.0);
    }
    // ln I = ln a + b ln(b/a)/(b - a) - 1
    const double exponent = b * std::log1p((b - a) / a) / (b - a) - 1.0;
    return a * std::exp(exponent);
}

double generalized_log(double n, double a, double b) {
    require_positive(a, b);
    if (n == -1.0 || n == 0.0) {
        throw DomainError("generalized logarithmic mean undefined at n = -1 and n = 0");
    }
    if (a == b) return a;
    if (near_equal(a, b)) {
        const double eps = half_spread(a, b);
        return 0.5 * (a + b) * (1.0 + (n - 1.0) * eps * eps / 6.0);
    }
    // L_n^n / a^n = ((b/a)^{n+1} - 1) / ((n+1)(b/a - 1))
    const double delta = (b - a) / a;
    const double ratio = std::expm1((n + 1.0) * std::log1p(delta)) / ((n + 1.0) * delta);
    return a * std::pow(ratio, 1.0 / n);
}

double mean(const Mean& m, double a, double b) {
    switch (m.kind) {
        case MeanKind::arithmetic: return arithmetic(a, b);
        case MeanKind::geometric: return geometric(a, b);
        case MeanKind::harmonic: return harmonic(a, b);
        case MeanKind::logarithmic: return logarithmic(a, b);
        case MeanKind::identric: return identric(a, b);
        case MeanKind::generalized_log: return generalized_log(m.n, a, b);
    }
    throw DomainError("unknown mean kind");
}

MeansChain means_chain(double a, double b) {
    MeansChain c;
    c.harmonic = harmonic(a, b);
    c.geometric = geometric(a, b);
    c.logarithmic = logarithmic(a, b);
    c.identric = identric(a, b);
    c.arithmetic = arithmetic(a, b);
    const auto le = [](double x, double y) { return x <= y * (1.0 + 1e-12); };
    c.holds = le(c.harmonic, c.geometric) && le(c.geometric, c.logarithmic) &&
              le(c.logarithmic, c.identric) && le(c.identric, c.arithmetic);
    return c;
}

bool means_chain_check(double a, double b) { return means_chain(a, b).holds; }

double spliced_generalized_log(double n, double a, double b) {
    if (n == -1.0) return logarithmic(a, b);
    if (n == 0.0) return identric(a, b);
    return generalized_log(n, a, b);
}

bool ln_monotonicity_check(double a, double b, std::span<const double> n_grid) {
    require_positive(a, b);
    if (!std::is_sorted(n_grid.begin(), n_grid.end())) {
        throw DomainError("ln_monotonicity_check: grid must be sorted");
    }
    double previous = 0.0;
    bool first = true;
    for (double n : n_grid) {
        const double value = spliced_generalized_log(n, a, b);
        if (!first && value < previous - 1e-10 * std::max(std::abs(previous), 1.0)) return false;
        previous = value;
        first = false;
    }
    return true;
}

PropositionReport proposition_check(int id, double a, double b, double q, int n,
                                    const BoundOptions& options) {
    require_positive(a, b);
    if (!(a <= b)) throw DomainError("proposition_check needs a <= b");
    if (id == 2) {
        if (!(q >= 1.0)) throw DomainError("proposition 2 needs q >= 1");
        if (n < 2) throw DomainError("proposition 2 needs n >= 2");
    } else if (!(q > 1.0)) {
        throw DomainError(fmt::format("proposition {} needs q > 1", id));
    }

    PropositionReport r;
    r.id = id;
    r.a = a;
    r.b = b;
    r.q = q;
    r.n = id == 2 ? n : 0;
    const double w = b - a;
    const double p = q > 1.0 ? q / (q - 1.0) : std::numeric_limits<double>::infinity();
    const HFunction h = HFunction::identity();

    FunctionSpec parent_fs;
    int parent_theorem = 0;
    switch (id) {
        case 1: {
            const double ea = std::exp(a);
            const double eb = std::exp(b);
            r.lhs = std::abs(logarithmic(ea, eb) - arithmetic(ea, eb));
            const double gq = std::pow(geometric(ea, eb), q);
            r.printed_rhs = w * w / 16.0 * std::pow(specialfn::beta(0.5, p + 1.0), 1.0 / p) *
                            arithmetic(std::pow(std::exp(q * a) + gq, 1.0 / q),
                                       std::pow(std::exp(q * b) + gq, 1.0 / q));
            r.notes.emplace_back(notes::kProp1ExpTransform);
            parent_fs = corpus::make_exp();
            parent_theorem = 7;
            break;
        }
        case 2: {
            const double nn = static_cast<double>(n);
            const double am = arithmetic(a, b);
            r.lhs = std::abs(arithmetic(std::pow(a, nn), std::pow(b, nn)) -
                             std::pow(generalized_log(nn, a, b), nn));
            const double am2 = std::pow(am, nn - 2.0);
            r.printed_rhs =
                w * w / 12.0 * std::pow(1.0 / (nn * (nn + 1.0)), 1.0 / q) *
                arithmetic(std::pow((3.0 * std::pow(a, nn - 2.0) + 5.0 * am2) / 8.0, 1.0 / q),
                           std::pow((3.0 * std::pow(b, nn - 2.0) + 5.0 * am2) / 8.0, 1.0 / q));
            r.notes.emplace_back(notes::kProp2Unmatched);
            parent_fs = corpus::make_power(n);
            parent_theorem = 8;
            break;
        }
        case 3: {
            r.lhs = std::abs(1.0 / logarithmic(a, b) - 1.0 / arithmetic(a, b));
            r.printed_rhs = w * w / 4.0 * std::pow(1.0 / (2.0 * p + 1.0), 1.0 / p) *
                            std::pow(harmonic(std::pow(a, 3.0 * q), std::pow(b, 3.0 * q)), -1.0 / q);
            r.notes.emplace_back(notes::kProp3StrayN);
            parent_fs = corpus::make_reciprocal();
            parent_theorem = 11;
            break;
        }
        case 4: {
            const double am = arithmetic(a, b);
            r.lhs = std::log(am / identric(a, b));
            r.printed_rhs = w * w / 4.0 * std::pow(1.0 / (2.0 * p + 1.0), 1.0 / p) *
                            std::pow(0.5, 1.0 / q) / (am * am);
            r.notes.emplace_back(notes::kProp4LogReading);
            r.notes.emplace_back(notes::kProp4HalfFactor);
            parent_fs = corpus::make_neg_log();
            parent_theorem = 13;
            break;
        }
        default:
            throw DomainError(fmt::format("unknown proposition {}", id));
    }
    r.printed_holds = r.lhs <= r.printed_rhs + options.tol;

    if (a == b) {
        r.parent_precondition_ok = true;
        r.parent_rhs = 0.0;
        r.parent_lhs = 0.0;
    } else {
        const BoundReport parent = bounds::evaluate_bound(parent_theorem, parent_fs, h, a, b, q, options);
        r.parent_precondition_ok = parent.precondition_ok;
        r.parent_rhs = parent.bound.value();
        r.parent_lhs = parent.lhs;
    }
    r.parent_holds = r.lhs <= r.parent_rhs + options.tol;
    return r;
}

}  // namespace hhineq::means
