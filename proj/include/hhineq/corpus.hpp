#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hhineq/function_spec.hpp"
#include "hhineq/hfunction.hpp"

namespace hhineq::corpus {

// Compiled-in test functions. Each carries f, f'' and its domain.
FunctionSpec make_square();                              // "xsq"     x^2
FunctionSpec make_quartic();                             // "xquart"  x^4
FunctionSpec make_exp();                                 // "exp"     e^x
FunctionSpec make_reciprocal();                          // "recip"   1/x, x > 0
FunctionSpec make_neg_log();                             // "neglog"  -ln x, x > 0
FunctionSpec make_power(int n);                          // "xpow<n>" x^n, x >= 0
FunctionSpec make_x52();                                 // "x52"     (4/15) x^{5/2}
FunctionSpec make_affine(double slope = 1.0, double intercept = 3.0);  // "affine"
FunctionSpec make_sqrt();                                // "sqrt"    sqrt(x)
FunctionSpec make_constant(double c);                    // "const"

struct CorpusEntry {
    FunctionSpec spec;
    /// Where random working intervals are drawn and where class claims are
    /// validated.
    Interval sample_domain;

    /// h kinds for which the claims say `subject` (at exponent q) is in the
    /// given class.
    std::vector<std::string> claimed_h(ClaimSubject subject, double q, Curvature curvature) const;
};

/// The default corpus, in a fixed order.
const std::vector<CorpusEntry>& entries();

/// Throws ConfigError for an unknown id.
const CorpusEntry& entry(std::string_view id);

/// Re-checks every class claim of `selected` on its sample domain and the f''
/// oracle by finite differences. Throws CorpusIntegrityError on the first
/// failure.
void validate(std::span<const CorpusEntry* const> selected, const MembershipOptions& options,
              std::uint64_t seed);

}  // namespace hhineq::corpus
