#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace twogon::coeffs {

enum class Method { Recursive, Direct, AlphaZeroLimit };

std::string_view to_string(Method m);

/// Taylor coefficients g_0..g_N of the 2-gon map
///   f_alpha(z) = (((1+z)/(1-z))^alpha - 1) / (2 alpha),
/// with f_0 = (1/2) log((1+z)/(1-z)) at alpha = 0. Immutable once built.
class CoefficientTable {
public:
    CoefficientTable(double alpha, Method method, std::vector<double> values);

    double alpha() const noexcept { return alpha_; }
    Method method() const noexcept { return method_; }
    std::size_t order() const noexcept { return values_.size() - 1; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t n) const { return values_[n]; }

private:
    double alpha_;
    Method method_;
    std::vector<double> values_;
};

/// Largest n accepted by coeff_direct.
inline constexpr unsigned kDirectMaxOrder = 60;

/// g_n via g_{n+2} = (2 alpha g_{n+1} + n g_n) / (n + 2), g_0 = 0, g_1 = 1.
/// alpha in (0,1]; alpha = 0 is rejected (use coeff_alpha_zero).
CoefficientTable coeff_table_recursive(double alpha, std::size_t order);

/// g_n(alpha) = (1/(2 alpha)) sum_{k=1}^n 2^k C(alpha,k) C(n-1,n-k), evaluated
/// in exact rational arithmetic and rounded once. The sum alternates in sign
/// and loses about n log10(3) digits in double, so it is only meant as an
/// independent check of the recursion. n = 0 and n = 1 return 0 and 1.
double coeff_direct(double alpha, unsigned n);

/// Table built from coeff_direct (g_0, g_1 fixed), for n <= kDirectMaxOrder.
CoefficientTable coeff_table_direct(double alpha, std::size_t order);

/// Coefficients of f_0: 1/n for odd n, 0 for even n.
CoefficientTable coeff_alpha_zero(std::size_t order);

/// G_n = n^(1-alpha) g_n.
double normalized_G(const CoefficientTable& table, std::size_t n);

/// L(alpha) = 2^(alpha-1) / Gamma(alpha+1), the limit of G_n. Defined on (0,1].
double coeff_limit_L(double alpha);

/// Streams g_0, g_1, ... with two running values (O(1) memory).
class RecursiveStream {
public:
    explicit RecursiveStream(double alpha);
    double next();

private:
    double alpha2_;
    double prev_ = 0.0;  // g_{n-2}
    double cur_ = 0.0;   // g_{n-1}
    std::size_t n_ = 0;
};

/// Single coefficient g_k(alpha) for alpha in [0,1] (k small; O(k)).
double g_single(double alpha, std::size_t k);

}  // namespace twogon::coeffs
