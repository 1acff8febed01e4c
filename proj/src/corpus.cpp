#include "hhineq/corpus.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "hhineq/errors.hpp"

namespace hhineq::corpus {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const Interval kReals{-kInf, kInf, true, true};
const Interval kPositive{0.0, kInf, true, true};
const Interval kNonNegative{0.0, kInf, false, true};

const Interval kSymmetricSample{-2.0, 2.0};
const Interval kPositiveSample{0.1, 3.0};

const std::vector<std::string> kAllH = {"identity", "constant-one", "power:0.5", "reciprocal"};
const std::vector<double> kClaimQ = {1.0, 1.5, 2.0, 3.0};

void claim_f(FunctionSpec& fs, const std::vector<std::string>& hs, Curvature c) {
    for (const auto& h : hs) fs.class_claims.push_back({ClaimSubject::function, 1.0, h, c});
}

void claim_f2(FunctionSpec& fs, const std::vector<double>& qs, const std::vector<std::string>& hs,
              Curvature c) {
    for (double q : qs) {
        for (const auto& h : hs) {
            fs.class_claims.push_back({ClaimSubject::second_derivative_power, q, h, c});
        }
    }
}

CorpusEntry make_entry(FunctionSpec spec, Interval sample) {
    return CorpusEntry{std::move(spec), sample};
}

}  // namespace

FunctionSpec make_square() {
    FunctionSpec fs{"xsq", [](double x) { return x * x; }, [](double) { return 2.0; }, kReals, {}};
    claim_f(fs, {"identity", "constant-one", "power:0.5"}, Curvature::convex);
    // |f''|^q is constant, hence both convex and (for h = t) concave.
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    claim_f2(fs, kClaimQ, {"identity"}, Curvature::concave);
    return fs;
}

FunctionSpec make_quartic() {
    FunctionSpec fs{"xquart", [](double x) { return x * x * x * x; },
                    [](double x) { return 12.0 * x * x; }, kReals, {}};
    claim_f(fs, {"identity", "constant-one", "power:0.5"}, Curvature::convex);
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    return fs;
}

FunctionSpec make_exp() {
    FunctionSpec fs{"exp", [](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
                    kReals, {}};
    claim_f(fs, {"identity", "constant-one", "power:0.5"}, Curvature::convex);
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    return fs;
}

FunctionSpec make_reciprocal() {
    FunctionSpec fs{"recip", [](double x) { return 1.0 / x; },
                    [](double x) { return 2.0 / (x * x * x); }, kPositive, {}};
    claim_f(fs, {"identity", "constant-one", "power:0.5"}, Curvature::convex);
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    return fs;
}

FunctionSpec make_neg_log() {
    // Negative beyond x = 1, so f itself carries no class claim.
    FunctionSpec fs{"neglog", [](double x) { return -std::log(x); },
                    [](double x) { return 1.0 / (x * x); }, kPositive, {}};
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    return fs;
}

FunctionSpec make_power(int n) {
    if (n < 2) throw DomainError(fmt::format("make_power: n must be >= 2, got {}", n));
    const double e = static_cast<double>(n);
    FunctionSpec fs{fmt::format("xpow{}", n), [e](double x) { return std::pow(x, e); },
                    [e](double x) { return e * (e - 1.0) * std::pow(x, e - 2.0); }, kNonNegative,
                    {}};
    claim_f(fs, {"identity", "constant-one", "power:0.5"}, Curvature::convex);
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    if (n == 3) claim_f2(fs, {1.0}, {"identity"}, Curvature::concave);
    if (n == 2) claim_f2(fs, kClaimQ, {"identity"}, Curvature::concave);
    return fs;
}

FunctionSpec make_x52() {
    FunctionSpec fs{"x52", [](double x) { return 4.0 / 15.0 * std::pow(x, 2.5); },
                    [](double x) { return std::sqrt(x); }, kNonNegative, {}};
    claim_f(fs, {"identity", "constant-one", "power:0.5"}, Curvature::convex);
    // |f''|^q = x^{q/2}: concave for q <= 2, convex for q >= 2; for q < 2
    // still in SX(t^{1/2}) by subadditivity of x^r, r <= 1/2 ... 3/4.
    claim_f2(fs, {1.0, 1.5}, {"constant-one", "power:0.5", "reciprocal"}, Curvature::convex);
    claim_f2(fs, {2.0, 3.0}, kAllH, Curvature::convex);
    claim_f2(fs, {1.0, 1.5, 2.0}, {"identity"}, Curvature::concave);
    return fs;
}

FunctionSpec make_affine(double slope, double intercept) {
    FunctionSpec fs{"affine", [slope, intercept](double x) { return slope * x + intercept; },
                    [](double) { return 0.0; }, kReals, {}};
    claim_f(fs, {"identity", "constant-one", "power:0.5"}, Curvature::convex);
    claim_f(fs, {"identity"}, Curvature::concave);
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    claim_f2(fs, kClaimQ, kAllH, Curvature::concave);
    return fs;
}

FunctionSpec make_sqrt() {
    FunctionSpec fs{"sqrt", [](double x) { return std::sqrt(x); },
                    [](double x) { return -0.25 / (x * std::sqrt(x)); }, kNonNegative, {}};
    claim_f(fs, {"constant-one", "power:0.5", "reciprocal"}, Curvature::convex);
    claim_f(fs, {"identity"}, Curvature::concave);
    claim_f2(fs, kClaimQ, kAllH, Curvature::convex);
    return fs;
}

FunctionSpec make_constant(double c) {
    return FunctionSpec{"const", [c](double) { return c; }, [](double) { return 0.0; }, kReals, {}};
}

std::vector<std::string> CorpusEntry::claimed_h(ClaimSubject subject, double q,
                                                Curvature curvature) const {
    std::vector<std::string> out;
    for (const auto& c : spec.class_claims) {
        if (c.subject == subject && c.curvature == curvature &&
            (subject == ClaimSubject::function || c.q == q)) {
            out.push_back(c.h);
        }
    }
    return out;
}

const std::vector<CorpusEntry>& entries() {
    static const std::vector<CorpusEntry> all = {
        make_entry(make_square(), kSymmetricSample),
        make_entry(make_quartic(), kSymmetricSample),
        make_entry(make_exp(), kSymmetricSample),
        make_entry(make_reciprocal(), kPositiveSample),
        make_entry(make_neg_log(), kPositiveSample),
        make_entry(make_power(3), kPositiveSample),
        make_entry(make_power(5), kPositiveSample),
        make_entry(make_x52(), kPositiveSample),
        make_entry(make_affine(), kSymmetricSample),
        make_entry(make_sqrt(), kPositiveSample),
    };
    return all;
}

const CorpusEntry& entry(std::string_view id) {
    for (const auto& e : entries()) {
        if (e.spec.id == id) return e;
    }
    throw ConfigError(fmt::format("unknown corpus function '{}'", id));
}

void validate(std::span<const CorpusEntry* const> selected, const MembershipOptions& options,
              std::uint64_t seed) {
    for (const CorpusEntry* e : selected) {
        const auto fd = validate_second_derivative(e->spec, e->sample_domain, seed);
        if (!fd.ok) {
            throw CorpusIntegrityError(fmt::format(
                "'{}': f'' oracle disagrees with finite differences at x = {:.17g} (error {:.3g})",
                e->spec.id, fd.worst_point, fd.max_error));
        }
        for (const auto& claim : e->spec.class_claims) {
            const RealFn subject = claim.subject == ClaimSubject::function
                                       ? e->spec.f
                                       : abs_second_derivative_pow(e->spec, claim.q);
            MembershipReport report;
            try {
                report = check_h_class(subject, parse_h(claim.h), e->sample_domain, claim.curvature,
                                       options);
            } catch (const PreconditionError& err) {
                throw CorpusIntegrityError(
                    fmt::format("'{}': claim on {} rejected: {}", e->spec.id,
                                to_string(claim.subject), err.what()));
            }
            if (!report.holds) {
                throw CorpusIntegrityError(fmt::format(
                    "'{}': claim '{} (q = {}) is {}-{}' fails on [{}, {}] (violation {:.3g})",
                    e->spec.id, to_string(claim.subject), claim.q, claim.h,
                    to_string(claim.curvature), e->sample_domain.lo, e->sample_domain.hi,
                    report.max_violation));
            }
        }
    }
}

}  // namespace hhineq::corpus
