#pragma once

#include "hhineq/bound_report.hpp"
#include "hhineq/function_spec.hpp"
#include "hhineq/hfunction.hpp"

namespace hhineq::bounds {

// Trapezoid-gap bounds. Each report's lhs is |trapezoid_gap(f, a, b)|; the
// class precondition on |f''|^q is evaluated and recorded, never enforced.
// In what follows A = |f''(a)|, B = |f''(b)|, M = |f''((a+b)/2)| and
// p = q/(q-1).

/// ((b-a)^2/16) (A+B) int_0^1 (1-t^2)[h(t) + 2h(1/2)h(1-t)] dt.
BoundReport theorem6_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           const BoundOptions& options = {});

/// ((b-a)^2 / (16 2^{1/p})) Beta(1/2, p+1)^{1/p} (int h)^{1/q}
///   [(A^q + M^q)^{1/q} + (B^q + M^q)^{1/q}],  q > 1.
BoundReport theorem7_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           double q, const BoundOptions& options = {});

/// ((b-a)^2/16) (2/3)^{1-1/q} [ (int {(1-t^2)A^q + t(2-t)M^q} h)^{1/q}
///   + (int {(1-t^2)B^q + t(2-t)M^q} h)^{1/q} ],  q >= 1.
BoundReport theorem8_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           double q, const BoundOptions& options = {});

/// ((b-a)^2/32) Beta(1/2, p+1)^{1/p} (1/h(1/2))^{1/q}
///   [|f''((a+3b)/4)| + |f''((3a+b)/4)|],  q > 1, |f''|^q h-concave.
BoundReport theorem9_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                           double q, const BoundOptions& options = {});

// Midpoint-gap bounds; lhs is |midpoint_gap(f, a, b)|.

/// (b-a)^2 ((A+B)/2) int_0^1 m(t) h(t) dt.
BoundReport theorem10_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            const BoundOptions& options = {});

/// ((b-a)^2/8) (1/(2p+1))^{1/p} ((A^q + B^q) int h)^{1/q},  q > 1.
BoundReport theorem11_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            double q, const BoundOptions& options = {});

/// ((b-a)^2/2) (1/12)^{1-1/q} ((A^q + B^q) int m h)^{1/q},  q >= 1.
BoundReport theorem12_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            double q, const BoundOptions& options = {});

/// ((b-a)^2/4) (1/(2p+1))^{1/p} (1/(2h(1/2)))^{1/q} M,  q > 1, |f''|^q h-concave.
BoundReport theorem13_bound(const FunctionSpec& fs, const HFunction& h, double a, double b,
                            double q, const BoundOptions& options = {});

/// Dispatches on theorem number 6..13; q is ignored by 6 and 10.
BoundReport evaluate_bound(int theorem, const FunctionSpec& fs, const HFunction& h, double a,
                           double b, double q, const BoundOptions& options = {});

/// int_0^1 m(t) h(t) dt, split at t = 1/2.
ExtendedReal m_weighted_h_integral(const HFunction& h, double tol = 1e-13);

}  // namespace hhineq::bounds
