#pragma once

#include <cstdint>

namespace twogon::specfun {

/// Strictly positive finite real. Construction throws DomainError otherwise.
class PosReal {
public:
    explicit PosReal(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

/// ln Gamma(x) for x > 0. Lanczos approximation, relative error below 1e-13
/// on [0.5, 170] away from the zeros at x = 1 and x = 2 (where the absolute
/// error is below 1e-15).
double log_gamma(PosReal x);
double log_gamma(double x);

/// c_n(alpha) = Gamma(n + alpha) / (Gamma(alpha) n!), the n-th Taylor
/// coefficient of (1 - z)^(-alpha). Requires 0 < alpha <= 1.
double gamma_ratio_coeff(std::uint64_t n, double alpha);

/// Generalized binomial alpha (alpha-1) ... (alpha-k+1) / k!, as a signed
/// running product. Valid for any finite real alpha.
double binom_real(double alpha, unsigned k);

}  // namespace twogon::specfun
