#pragma once

#include "hhineq/function_spec.hpp"

namespace hhineq::identities {

/// Closed-rule tolerance for the integral means inside the gaps; two orders
/// tighter than the 1e-9 identity threshold.
inline constexpr double kMeanTol = 1e-12;

enum class GapKind { trapezoid, midpoint };

/// (1/(b-a)) * integral of f over [a, b].
double integral_mean(const FunctionSpec& fs, double a, double b);

/// (f(a) + f(b))/2 minus the integral mean.
double trapezoid_gap(const FunctionSpec& fs, double a, double b);

/// Integral mean minus f((a+b)/2).
double midpoint_gap(const FunctionSpec& fs, double a, double b);

double gap(GapKind kind, const FunctionSpec& fs, double a, double b);

/// t^2 on [0, 1/2), (1-t)^2 on [1/2, 1].
double m_weight(double t);

/// ((b-a)^2/16) * int_0^1 (1-t^2) [f''((1+t)/2 a + (1-t)/2 b) + f''((1-t)/2 a + (1+t)/2 b)] dt
double lemma1_rhs(const FunctionSpec& fs, double a, double b);

/// ((b-a)^2/4) * int_0^1 m(t) [f''(ta + (1-t)b) + f''(tb + (1-t)a)] dt, split at t = 1/2.
double lemma2_rhs(const FunctionSpec& fs, double a, double b);

struct IdentityCheck {
    int lemma = 1;
    double lhs = 0.0;
    double rhs = 0.0;
    double delta = 0.0;
    bool holds = false;
};

/// Lemma 1 pairs trapezoid_gap with lemma1_rhs; lemma 2 pairs midpoint_gap
/// with lemma2_rhs. holds when |lhs - rhs| <= tol.
IdentityCheck verify_identity(int lemma, const FunctionSpec& fs, double a, double b,
                              double tol = 1e-9);

}  // namespace hhineq::identities
