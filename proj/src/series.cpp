#include "twogon/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "twogon/coeffs.hpp"
#include "twogon/errors.hpp"

namespace twogon::series {

double wrap_phase(double phase) {
    constexpr double pi = std::numbers::pi;
    double p = std::remainder(phase, 2.0 * pi);  // [-pi, pi]
    if (p <= -pi) p += 2.0 * pi;
    return p;
}

AlphaParam::AlphaParam(double modulus, double phase) : modulus_(modulus), phase_(phase) {
    if (!(modulus > 0.0 && modulus <= 1.0))
        throw DomainError("AlphaParam: modulus must lie in (0,1], got " + std::to_string(modulus));
    if (!std::isfinite(phase)) throw DomainError("AlphaParam: phase must be finite");
    constexpr double pi = std::numbers::pi;
    if (!(phase > -pi && phase <= pi)) phase_ = wrap_phase(phase);
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw ArgumentError("TruncatedSeries: order must be >= 1");
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw NumericalError("TruncatedSeries: non-finite coefficient");
}

TruncatedSeries two_gon_series(const AlphaParam& alpha, std::size_t order) {
    const auto table = coeffs::coeff_table_recursive(alpha.modulus(), order);
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (alpha.is_real() || n == 0)
            c[n] = table[n];
        else
            c[n] = table[n] * std::polar(1.0, static_cast<double>(n - 1) * alpha.phase());
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t order = std::min(f.order(), g.order());
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = f[n] * g[n];
    return TruncatedSeries(std::move(c));
}

Complex evaluate(const TruncatedSeries& f, Complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("evaluate: |z| must be < 1");
    const auto c = f.coeffs();
    Complex acc = 0.0;
    for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
    return acc;
}

double tail_bound(const TruncatedSeries& f, double abs_z) {
    if (!(abs_z >= 0.0 && abs_z < 1.0)) throw DomainError("tail_bound: |z| must lie in [0,1)");
    double cmax = 0.0;
    for (const auto& c : f.coeffs()) cmax = std::max(cmax, std::abs(c));
    return cmax * std::pow(abs_z, static_cast<double>(f.order() + 1)) / (1.0 - abs_z);
}

namespace {

class TwoGonStream final : public CoefficientStream {
public:
    explicit TwoGonStream(const AlphaParam& a) : gen_(a.modulus()), phase_(a.phase()) {}

    Complex next() override {
        const double g = gen_.next();
        const std::size_t n = index_++;
        if (phase_ == 0.0 || n == 0) return g;
        return g * std::polar(1.0, static_cast<double>(n - 1) * phase_);
    }

private:
    coeffs::RecursiveStream gen_;
    double phase_;
    std::size_t index_ = 0;
};

class ProductStream final : public CoefficientStream {
public:
    explicit ProductStream(std::vector<std::unique_ptr<CoefficientStream>> parts) : parts_(std::move(parts)) {}

    Complex next() override {
        Complex p = 1.0;
        for (auto& s : parts_) p *= s->next();
        return p;
    }

private:
    std::vector<std::unique_ptr<CoefficientStream>> parts_;
};

class StoredStream final : public CoefficientStream {
public:
    explicit StoredStream(std::shared_ptr<const TruncatedSeries> s) : series_(std::move(s)) {}

    Complex next() override {
        const std::size_t n = index_++;
        return n <= series_->order() ? (*series_)[n] : Complex{};
    }

private:
    std::shared_ptr<const TruncatedSeries> series_;
    std::size_t index_ = 0;
};

}  // namespace

StreamFactory two_gon_stream(const AlphaParam& alpha) {
    return [alpha] { return std::make_unique<TwoGonStream>(alpha); };
}

StreamFactory hadamard_stream(std::vector<StreamFactory> factors) {
    if (factors.empty()) throw ArgumentError("hadamard_stream: need at least one factor");
    return [factors = std::move(factors)] {
        std::vector<std::unique_ptr<CoefficientStream>> parts;
        parts.reserve(factors.size());
        for (const auto& f : factors) parts.push_back(f());
        return std::make_unique<ProductStream>(std::move(parts));
    };
}

StreamFactory series_stream(TruncatedSeries series) {
    auto shared = std::make_shared<const TruncatedSeries>(std::move(series));
    return [shared] { return std::make_unique<StoredStream>(shared); };
}

}  // namespace twogon::series
