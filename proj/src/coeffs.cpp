#include "twogon/coeffs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "twogon/errors.hpp"
#include "twogon/specfun.hpp"

namespace twogon::coeffs {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Recursive: return "recursive";
        case Method::Direct: return "direct";
        case Method::AlphaZeroLimit: return "alpha-zero-limit";
    }
    return "unknown";
}

CoefficientTable::CoefficientTable(double alpha, Method method, std::vector<double> values)
    : alpha_(alpha), method_(method), values_(std::move(values)) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("CoefficientTable: alpha must lie in [0,1]");
    if (values_.size() < 2) throw ArgumentError("CoefficientTable: order must be >= 1");
}

CoefficientTable coeff_table_recursive(double alpha, std::size_t order) {
    if (alpha == 0.0)
        throw DomainError("coeff_table_recursive: alpha = 0 is the f_0 limit; use coeff_alpha_zero");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("coeff_table_recursive: alpha must lie in (0,1], got " + std::to_string(alpha));
    if (order < 1) throw ArgumentError("coeff_table_recursive: order must be >= 1");

    std::vector<double> g(order + 1);
    g[0] = 0.0;
    g[1] = 1.0;
    for (std::size_t n = 0; n + 2 <= order; ++n) {
        const double nd = static_cast<double>(n);
        g[n + 2] = (2.0 * alpha * g[n + 1] + nd * g[n]) / (nd + 2.0);
    }
    return CoefficientTable(alpha, Method::Recursive, std::move(g));
}

CoefficientTable coeff_table_direct(double alpha, std::size_t order) {
    if (order < 1) throw ArgumentError("coeff_table_direct: order must be >= 1");
    if (order > kDirectMaxOrder)
        throw PrecisionError("coeff_table_direct: order " + std::to_string(order) + " exceeds direct-formula cap " +
                             std::to_string(kDirectMaxOrder) + "; use the recursion");
    std::vector<double> g(order + 1);
    for (std::size_t n = 0; n <= order; ++n) g[n] = coeff_direct(alpha, static_cast<unsigned>(n));
    return CoefficientTable(alpha, Method::Direct, std::move(g));
}

CoefficientTable coeff_alpha_zero(std::size_t order) {
    if (order < 1) throw ArgumentError("coeff_alpha_zero: order must be >= 1");
    std::vector<double> g(order + 1, 0.0);
    for (std::size_t n = 1; n <= order; n += 2) g[n] = 1.0 / static_cast<double>(n);
    return CoefficientTable(0.0, Method::AlphaZeroLimit, std::move(g));
}

double normalized_G(const CoefficientTable& table, std::size_t n) {
    if (n < 1 || n > table.order())
        throw ArgumentError("normalized_G: n must lie in [1, " + std::to_string(table.order()) + "]");
    return std::pow(static_cast<double>(n), 1.0 - table.alpha()) * table[n];
}

double coeff_limit_L(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("coeff_limit_L: L is defined on (0,1] only, got " + std::to_string(alpha));
    return std::exp((alpha - 1.0) * std::numbers::ln2 - specfun::log_gamma(alpha + 1.0));
}

RecursiveStream::RecursiveStream(double alpha) : alpha2_(2.0 * alpha) {}

double RecursiveStream::next() {
    double g;
    if (n_ == 0) {
        g = 0.0;
    } else if (n_ == 1) {
        g = 1.0;
    } else {
        const double m = static_cast<double>(n_ - 2);
        g = (alpha2_ * cur_ + m * prev_) / (m + 2.0);
    }
    prev_ = cur_;
    cur_ = g;
    ++n_;
    return g;
}

double g_single(double alpha, std::size_t k) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("g_single: alpha must lie in [0,1]");
    if (alpha == 1.0) return k == 0 ? 0.0 : 1.0;
    RecursiveStream s(alpha);
    double g = 0.0;
    for (std::size_t n = 0; n <= k; ++n) g = s.next();
    return g;
}

}  // namespace twogon::coeffs
