#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace twogon::series {

using Complex = std::complex<double>;

/// 2-gon parameter alpha = modulus * e^{i phase}, modulus in (0,1], phase in (-pi, pi].
/// A nonzero phase denotes the rotated map e^{-i phase} f_{modulus}(e^{i phase} z).
class AlphaParam {
public:
    explicit AlphaParam(double modulus, double phase = 0.0);

    double modulus() const noexcept { return modulus_; }
    double phase() const noexcept { return phase_; }
    bool is_real() const noexcept { return phase_ == 0.0; }
    Complex value() const { return std::polar(modulus_, phase_); }

private:
    double modulus_;
    double phase_;
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

/// Partial sum c_0 + c_1 z + ... + c_N z^N, N >= 1, finite entries.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    const Complex& operator[](std::size_t n) const { return coeffs_[n]; }

private:
    std::vector<Complex> coeffs_;
};

/// Taylor coefficients of f_alpha up to order N: g_n(|alpha|) e^{i (n-1) phase}.
TruncatedSeries two_gon_series(const AlphaParam& alpha, std::size_t order);

/// Coefficientwise (Hadamard) product; order is the smaller of the two orders.
TruncatedSeries hadamard(const TruncatedSeries& f, const TruncatedSeries& g);

/// Horner evaluation of the partial sum at |z| < 1. The truncation error is the
/// caller's concern; it is bounded by max|c_n| |z|^{N+1} / (1 - |z|) whenever
/// the omitted coefficients share the bound max|c_n|.
Complex evaluate(const TruncatedSeries& f, Complex z);

/// Tail bound max_n |c_n| |z|^{N+1} / (1 - |z|).
double tail_bound(const TruncatedSeries& f, double abs_z);

// --- coefficient streams -------------------------------------------------

/// Produces c_0, c_1, c_2, ... in order. Each radius worker owns its stream.
class CoefficientStream {
public:
    virtual ~CoefficientStream() = default;
    virtual Complex next() = 0;
};

/// Re-generable coefficient source: every call starts a fresh stream at c_0.
using StreamFactory = std::function<std::unique_ptr<CoefficientStream>()>;

StreamFactory two_gon_stream(const AlphaParam& alpha);
/// Coefficientwise product of any number of sources.
StreamFactory hadamard_stream(std::vector<StreamFactory> factors);
/// Stored coefficients followed by zeros.
StreamFactory series_stream(TruncatedSeries series);

// --- radial asymptotics --------------------------------------------------

enum class ScaleKind { Power, Log };

/// Scaling applied to S(r) = sum c_n r^n.
/// Power: (1-r)^gamma S(r), extrapolated by a least-squares line in
///        x = (1-r)^correction_exponent over the last fit_points radii (intercept).
/// Log:   S(r) / (-log(1-r)), extrapolated by fitting S(r) = a (-log(1-r)) + b (slope a).
struct RadialMode {
    ScaleKind kind = ScaleKind::Power;
    double gamma = 1.0;
    double correction_exponent = 0.5;

    static RadialMode power(double gamma, double correction_exponent) {
        return {ScaleKind::Power, gamma, correction_exponent};
    }
    static RadialMode log() { return {ScaleKind::Log, 0.0, 0.0}; }
};

std::string_view to_string(ScaleKind kind);

/// Radii r_j = 1 - 2^{-j}, j = j_min..j_max, truncated at N_j = ceil(tail_factor / (1 - r_j)).
struct RadialSchedule {
    int j_min = 4;
    int j_max = 20;
    double tail_factor = 40.0;
    std::size_t fit_points = 6;

    std::vector<double> radii() const;
    std::size_t truncation(double r) const;
};

struct GridPoint {
    double r;
    double scaled_value;
    Complex partial_sum;
};

struct AsymptoticEstimate {
    std::vector<GridPoint> grid;
    double extrapolated_limit = 0.0;
    RadialMode mode;
};

/// S(r) = sum_{n <= N} c_n r^n streamed from a fresh source.
Complex radial_sum(const StreamFactory& source, double r, std::size_t terms);

/// Evaluates the scaled partial sums on the schedule (radii in parallel) and
/// extrapolates r -> 1. Throws NumericalError on non-finite sums.
AsymptoticEstimate radial_asymptotic(const StreamFactory& source, const RadialMode& mode,
                                     const RadialSchedule& schedule = {});

/// Ordinary least squares y = intercept + slope x.
struct LineFit {
    double intercept;
    double slope;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace twogon::series
