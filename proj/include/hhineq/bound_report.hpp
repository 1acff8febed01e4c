#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hhineq/extended_real.hpp"
#include "hhineq/function_spec.hpp"
#include "hhineq/hfunction.hpp"

namespace hhineq {

/// Machine-readable codes for places where an evaluator departs from the
/// inequality as typeset.
namespace notes {
inline constexpr const char* kEq8FinalLine = "EQ8_FINAL_LINE";
inline constexpr const char* kThm8Q1Continuity = "THM8_Q1_CONTINUITY";
inline constexpr const char* kThm9QGreaterThanOne = "THM9_Q_GT_1";
inline constexpr const char* kEq14ExponentInserted = "EQ14_EXPONENT_INSERTED";
inline constexpr const char* kThm13PReadAsQ = "THM13_P_READ_AS_Q";
inline constexpr const char* kThm15ProofForm = "THM15_PROOF_FORM";
inline constexpr const char* kThm16ProofForm = "THM16_PROOF_FORM";
inline constexpr const char* kDivergentH = "H_INTEGRAL_DIVERGENT";
inline constexpr const char* kIdentity = "IDENTITY_ROW";
inline constexpr const char* kEvaluationError = "EVALUATION_ERROR";
inline constexpr const char* kProp1ExpTransform = "PROP1_EXP_TRANSFORM";
inline constexpr const char* kProp2Unmatched = "PROP2_CONSTANT_UNMATCHED";
inline constexpr const char* kProp3StrayN = "PROP3_STRAY_N";
inline constexpr const char* kProp4LogReading = "PROP4_LOG_READING";
inline constexpr const char* kProp4HalfFactor = "PROP4_HALF_FACTOR";
}  // namespace notes

/// One verification row.
struct BoundReport {
    std::string theorem;
    std::string function;
    std::string h;
    double a = 0.0;
    double b = 0.0;
    std::optional<double> q;
    double lhs = 0.0;
    ExtendedReal bound;
    ExtendedReal slack;
    bool precondition_ok = true;
    bool satisfied = true;
    std::vector<std::string> notes;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// Sets slack = bound - lhs and satisfied = lhs <= bound + tol. An infinite
/// bound is satisfied vacuously.
void finalize(BoundReport& report, double tol);

/// Memoizes class-membership verdicts; safe to share across threads.
class MembershipCache {
public:
    using Key = std::tuple<std::string, std::string, double, double, int, double, int>;

    std::optional<bool> find(const Key& key) const;
    void store(const Key& key, bool verdict);

private:
    mutable std::mutex mutex_;
    std::map<Key, bool> verdicts_;
};

struct BoundOptions {
    /// Satisfaction tolerance: lhs <= bound + tol.
    double tol = 1e-9;
    /// Tolerance for the h-weighted constant integrals.
    double quad_tol = 1e-13;
    MembershipOptions membership;
    MembershipCache* cache = nullptr;
};

/// Whether |f''|^q is h-convex / h-concave on [a, b]. A negative sample or
/// a failing grid check both yield false.
bool second_derivative_in_class(const FunctionSpec& fs, const HFunction& h, double a, double b,
                                double q, Curvature curvature, const BoundOptions& options);

/// Whether f itself is h-convex / h-concave on [a, b].
bool function_in_class(const FunctionSpec& fs, const HFunction& h, double a, double b,
                       Curvature curvature, const BoundOptions& options);

}  // namespace hhineq
