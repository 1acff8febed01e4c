#pragma once

#include "hhineq/bound_report.hpp"
#include "hhineq/extended_real.hpp"
#include "hhineq/function_spec.hpp"
#include "hhineq/hfunction.hpp"

namespace hhineq::refinements {

/// lower <= middle <= upper for the h-Hermite-Hadamard double inequality.
struct TripleReport {
    double lower = 0.0;
    double middle = 0.0;
    ExtendedReal upper;
    bool left_holds = false;
    bool right_holds = false;
    bool precondition_ok = true;
};

/// lower = f((a+b)/2) / (2h(1/2)), middle = integral mean of f,
/// upper = (f(a) + f(b)) * int_0^1 h.
/// Throws DegenerateHError when h(1/2) = 0.
TripleReport theorem5_check(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            const BoundOptions& options = {});

struct RefinedUpperReport {
    double lhs = 0.0;
    ExtendedReal rhs;
    bool holds = false;
    /// (f(x) + f(y)) * int_0^1 h.
    ExtendedReal classic_upper;
    bool within_classic = false;
};

/// Integrates the h-convexity inequality over t in [alpha, beta_hi]:
///   lhs = int f(tx + (1-t)y) dt,
///   rhs = f(x) int h(t) dt + f(y) int h(1-t) dt.
/// Throws DomainError unless 0 <= alpha < beta_hi <= 1.
RefinedUpperReport refined_upper_check(const RealFn& f, const HFunction& h, double x, double y,
                                       double alpha, double beta_hi, double tol = 1e-9);

struct RefinementReport {
    ExtendedReal outer;
    ExtendedReal inner;
    bool holds = false;
    bool precondition_ok = true;
};

/// outer = (2h(1/2)/(b-a)) int f - f(m),
/// inner = | (2h(1/2)/(b-a)) int |f(x) + f(a+b-x)|/2 dx - |f(m)| |.
RefinementReport theorem15_refinement(const FunctionSpec& fs, const HFunction& h, double a,
                                      double b, const BoundOptions& options = {});

/// outer = f(a) int h(t) + f(b) int h(1-t) - int_0^1 f(ta + (1-t)b) dt,
/// inner = | int |h(t)f(a) + h(1-t)f(b)| dt - int_0^1 |f(ta + (1-t)b)| dt |.
/// With a divergent h integral both are +inf and the check holds vacuously.
RefinementReport theorem16_refinement(const FunctionSpec& fs, const HFunction& h, double a,
                                      double b, const BoundOptions& options = {});

}  // namespace hhineq::refinements
