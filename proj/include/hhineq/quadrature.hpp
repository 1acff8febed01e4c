#pragma once

#include <cstddef>

#include "hhineq/extended_real.hpp"
#include "hhineq/types.hpp"

namespace hhineq::quadrature {

inline constexpr double kDefaultClosedTol = 1e-10;
inline constexpr double kDefaultOpenTol = 1e-8;

/// Intervals are never bisected past this depth; the achieved error is
/// reported instead.
inline constexpr int kMaxDepth = 50;
inline constexpr std::size_t kMaxSubintervals = 4000;

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]. Targets
/// |error| <= max(tol, tol * |value|).
///
/// Throws DomainError for a > b or tol <= 0, and EvaluationError (carrying
/// the abscissa) when f returns a non-finite sample. A zero-width interval
/// integrates to 0 without sampling f.
QuadResult integrate(const RealFn& f, double a, double b, double tol = kDefaultClosedTol);

/// Open rule for integrands with integrable endpoint singularities. Each half
/// of (a, b) is covered by panels that shrink geometrically toward its
/// endpoint; f is never evaluated at a or b. Panel contributions are summed
/// until the geometric tail estimate falls below tolerance.
///
/// Throws DivergenceError when panel contributions stop decaying near an
/// endpoint (e.g. 1/t at 0).
QuadResult integrate_open(const RealFn& f, double a, double b, double tol = kDefaultOpenTol);

/// integrate_open with divergence mapped to +inf. Only meaningful for
/// integrands that are non-negative near the divergent endpoint.
ExtendedReal integrate_extended(const RealFn& f, double a, double b,
                                double tol = kDefaultOpenTol);

}  // namespace hhineq::quadrature
