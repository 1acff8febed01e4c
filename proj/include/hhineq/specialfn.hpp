#pragma once

namespace hhineq::specialfn {

/// ln Gamma(x) for x > 0. Lanczos sum with g = 671/128 and 14 terms; error
/// in Gamma near 1e-15 relative on (0, 50].
double log_gamma(double x);

/// Beta(u, v) = Gamma(u) Gamma(v) / Gamma(u + v), evaluated through log_gamma.
double beta(double u, double v);

/// Integral over [0,1] of (1 - t^2)^p, p >= 0; equals Beta(1/2, p + 1) / 2.
double int_one_minus_t2_pow(double p);

}  // namespace hhineq::specialfn
