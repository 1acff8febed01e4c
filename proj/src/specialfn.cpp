#include "hhineq/specialfn.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hhineq/errors.hpp"

namespace hhineq::specialfn {

namespace {

constexpr double kLanczosG = 671.0 / 128.0;
constexpr double kSqrtTwoPi = 2.5066282746310005;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("log_gamma: argument must be positive and finite, got " +
                          std::to_string(x));
    }
    const double shifted = x + kLanczosG;
    const double head = (x + 0.5) * std::log(shifted) - shifted;
    double series = kLanczosC0;
    double y = x;
    for (double c : kLanczosCoeffs) series += c / ++y;
    return head + std::log(kSqrtTwoPi * series / x);
}

double beta(double u, double v) {
    if (!(u > 0.0) || !(v > 0.0)) {
        throw DomainError("beta: arguments must be positive");
    }
    return std::exp(log_gamma(u) + log_gamma(v) - log_gamma(u + v));
}

double int_one_minus_t2_pow(double p) {
    if (!(p >= 0.0)) throw DomainError("int_one_minus_t2_pow: p must be >= 0");
    return 0.5 * beta(0.5, p + 1.0);
}

}  // namespace hhineq::specialfn
