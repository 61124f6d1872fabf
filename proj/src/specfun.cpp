#include "twogon/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "twogon/errors.hpp"

namespace twogon::specfun {

namespace {

// Lanczos series with g = 671/128 and 14 terms, constants from
// Press et al., Numerical Recipes 3rd ed. (2007), routine gammln.
constexpr double kLanczosShift = 5.24218750000000000;  // 671/128
constexpr double kLanczosBase = 0.999999999999997092;
constexpr double kSqrtTwoPi = 2.5066282746310005;
constexpr std::array<double, 14> kLanczosCoeffs = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

double lanczos_log_gamma(double x) {
    double tmp = x + kLanczosShift;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = kLanczosBase;
    double y = x;
    for (double c : kLanczosCoeffs) ser += c / ++y;
    return tmp + std::log(kSqrtTwoPi * ser / x);
}

// Stirling remainder mu(x) = lnGamma(x) - (x - 1/2) ln x + x - ln(2 pi)/2,
// Bernoulli series truncated at x^-11; below 1e-17 for x >= 20.
double stirling_remainder(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    return inv *
           (1.0 / 12.0 +
            inv2 * (-1.0 / 360.0 +
                    inv2 * (1.0 / 1260.0 +
                            inv2 * (-1.0 / 1680.0 + inv2 * (1.0 / 1188.0 + inv2 * (-691.0 / 360360.0))))));
}

constexpr std::uint64_t kStirlingThreshold = 20;

}  // namespace

PosReal::PosReal(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw DomainError("log_gamma: argument must be positive and finite, got " + std::to_string(value));
}

double log_gamma(PosReal x) {
    const double v = x.value();
    if (v == 1.0 || v == 2.0) return 0.0;
    return lanczos_log_gamma(v);
}

double log_gamma(double x) { return log_gamma(PosReal(x)); }

double gamma_ratio_coeff(std::uint64_t n, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("gamma_ratio_coeff: alpha must lie in (0,1], got " + std::to_string(alpha));
    if (alpha == 1.0) return 1.0;
    if (n < kStirlingThreshold) {
        double c = 1.0;
        for (std::uint64_t k = 1; k <= n; ++k) c *= (static_cast<double>(k) - 1.0 + alpha) / static_cast<double>(k);
        return c;
    }
    // ln c_n = ln Gamma(n + alpha) - ln Gamma(n + 1) - ln Gamma(alpha). With
    // x = n + 1 and y = x - d, d = 1 - alpha, the Stirling leading terms
    // combine to (y - 1/2) log1p(-d/x) - d ln x + d without cancellation.
    const double x = static_cast<double>(n) + 1.0;
    const double d = 1.0 - alpha;
    const double y = static_cast<double>(n) + alpha;
    const double log_ratio = (y - 0.5) * std::log1p(-d / x) - d * std::log(x) + d +
                             stirling_remainder(y) - stirling_remainder(x);
    return std::exp(log_ratio - log_gamma(alpha));
}

double binom_real(double alpha, unsigned k) {
    if (!std::isfinite(alpha)) throw DomainError("binom_real: alpha must be finite");
    double r = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        r *= alpha - static_cast<double>(j);
        r /= static_cast<double>(j + 1);
    }
    return r;
}

}  // namespace twogon::specfun
