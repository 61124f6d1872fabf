#include <cmath>
#include <string>

#include "twogon/errors.hpp"
#include "twogon/parallel.hpp"
#include "twogon/series.hpp"

namespace twogon::series {

std::string_view to_string(ScaleKind kind) { return kind == ScaleKind::Power ? "power" : "log"; }

std::vector<double> RadialSchedule::radii() const {
    if (j_min < 1 || j_max < j_min) throw ArgumentError("RadialSchedule: need 1 <= j_min <= j_max");
    std::vector<double> r;
    for (int j = j_min; j <= j_max; ++j) r.push_back(1.0 - std::ldexp(1.0, -j));
    return r;
}

std::size_t RadialSchedule::truncation(double r) const {
    return static_cast<std::size_t>(std::ceil(tail_factor / (1.0 - r)));
}

Complex radial_sum(const StreamFactory& source, double r, std::size_t terms) {
    constexpr std::size_t kRefresh = 4096;  // recompute r^n exactly this often
    auto stream = source();
    double power = 1.0;
    // Kahan-compensated accumulation, real and imaginary parts separately.
    double sre = 0.0, cre = 0.0, sim = 0.0, cim = 0.0;
    for (std::size_t n = 0; n <= terms; ++n) {
        if (n % kRefresh == 0) power = std::pow(r, static_cast<double>(n));
        const Complex t = stream->next() * power;
        const double yre = t.real() - cre;
        const double tre = sre + yre;
        cre = (tre - sre) - yre;
        sre = tre;
        const double yim = t.imag() - cim;
        const double tim = sim + yim;
        cim = (tim - sim) - yim;
        sim = tim;
        power *= r;
    }
    return {sre, sim};
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw ArgumentError("fit_line: need at least two matching points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) throw NumericalError("fit_line: degenerate abscissae");
    const double slope = sxy / sxx;
    return {my - slope * mx, slope};
}

AsymptoticEstimate radial_asymptotic(const StreamFactory& source, const RadialMode& mode,
                                     const RadialSchedule& schedule) {
    const auto radii = schedule.radii();
    if (schedule.fit_points < 2 || schedule.fit_points > radii.size())
        throw ArgumentError("radial_asymptotic: fit_points must lie in [2, number of radii]");

    std::vector<Complex> sums(radii.size());
    parallel_for(radii.size(), [&](std::size_t i) {
        sums[i] = radial_sum(source, radii[i], schedule.truncation(radii[i]));
    });

    AsymptoticEstimate est;
    est.mode = mode;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double r = radii[i];
        const Complex s = sums[i];
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
            throw NumericalError("radial_asymptotic: non-finite partial sum at r = " + std::to_string(r));
        const double scaled = mode.kind == ScaleKind::Power ? std::pow(1.0 - r, mode.gamma) * s.real()
                                                            : s.real() / -std::log1p(-r);
        est.grid.push_back({r, scaled, s});
    }

    const std::size_t first = radii.size() - schedule.fit_points;
    std::vector<double> x, y;
    for (std::size_t i = first; i < radii.size(); ++i) {
        const double r = radii[i];
        if (mode.kind == ScaleKind::Power) {
            x.push_back(std::pow(1.0 - r, mode.correction_exponent));
            y.push_back(est.grid[i].scaled_value);
        } else {
            x.push_back(-std::log1p(-r));
            y.push_back(sums[i].real());
        }
    }
    const LineFit fit = fit_line(x, y);
    est.extrapolated_limit = mode.kind == ScaleKind::Power ? fit.intercept : fit.slope;
    if (!std::isfinite(est.extrapolated_limit)) throw NumericalError("radial_asymptotic: non-finite extrapolation");
    return est;
}

}  // namespace twogon::series
