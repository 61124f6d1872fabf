#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "twogon/coeffs.hpp"
#include "twogon/errors.hpp"
#include "twogon/series.hpp"

using namespace twogon;
using namespace twogon::series;

namespace {

constexpr double kPi = std::numbers::pi;

double f_alpha_closed(double a, double r) { return (std::pow((1.0 + r) / (1.0 - r), a) - 1.0) / (2.0 * a); }

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<Complex> c(order + 1);
    for (auto& x : c) x = {d(rng), d(rng)};
    return TruncatedSeries(std::move(c));
}

bool rel_close(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

class InfiniteStream final : public CoefficientStream {
public:
    Complex next() override { return {INFINITY, 0.0}; }
};

RadialSchedule short_schedule() {
    RadialSchedule s;
    s.j_max = 16;
    return s;
}

}  // namespace

TEST_CASE("AlphaParam invariants") {
    CHECK_THROWS_AS(AlphaParam(0.0), DomainError);
    CHECK_THROWS_AS(AlphaParam(1.5), DomainError);
    CHECK_THROWS_AS(AlphaParam(0.5, INFINITY), DomainError);
    CHECK(AlphaParam(0.5).is_real());
    CHECK(AlphaParam(0.5, 1.5 * kPi).phase() == doctest::Approx(-0.5 * kPi));
    CHECK(AlphaParam(0.5, -kPi).phase() == doctest::Approx(kPi));
    CHECK(AlphaParam(0.5, kPi).phase() == kPi);
}

TEST_CASE("two_gon_series") {
    SUBCASE("phase 0 reproduces the real table exactly") {
        const auto t = coeffs::coeff_table_recursive(0.37, 100);
        const auto s = two_gon_series(AlphaParam(0.37), 100);
        for (std::size_t n = 0; n <= 100; ++n) REQUIRE(s[n] == Complex(t[n], 0.0));
    }
    SUBCASE("alpha = 0.5 i") {
        const auto s = two_gon_series(AlphaParam(0.5, kPi / 2), 5);
        CHECK(std::abs(s[3] - Complex(-0.5, 0.0)) < 1e-15);
        CHECK(std::abs(s[2] - Complex(0.0, 0.5)) < 1e-15);
        CHECK(s[1] == Complex(1.0, 0.0));
    }
    SUBCASE("products of rotated factors factor through lambda^(k-1)") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> md(0.05, 1.0), pd(-kPi, kPi);
        for (int trial = 0; trial < 50; ++trial) {
            const AlphaParam a(md(rng), pd(rng)), b(md(rng), pd(rng)), c(md(rng), pd(rng));
            const auto prod = hadamard(hadamard(two_gon_series(a, 40), two_gon_series(b, 40)), two_gon_series(c, 40));
            const Complex lambda = std::polar(1.0, a.phase() + b.phase() + c.phase());
            for (std::size_t k = 1; k <= 40; ++k) {
                const double g = coeffs::g_single(a.modulus(), k) * coeffs::g_single(b.modulus(), k) *
                                 coeffs::g_single(c.modulus(), k);
                const Complex want = std::pow(lambda, static_cast<double>(k - 1)) * g;
                REQUIRE(std::abs(prod[k] - want) < 1e-14);
            }
        }
    }
}

TEST_CASE("hadamard") {
    std::mt19937_64 rng(6);
    SUBCASE("f_1 is the identity") {
        const auto h = random_series(rng, 30);
        const auto p = hadamard(two_gon_series(AlphaParam(1.0), 50), h);
        CHECK(p.order() == 30);
        for (std::size_t n = 1; n <= 30; ++n) CHECK(p[n] == h[n]);
    }
    SUBCASE("zero series") {
        const auto z = TruncatedSeries(std::vector<Complex>(11));
        const auto p = hadamard(two_gon_series(AlphaParam(0.4), 10), z);
        for (const auto& c : p.coeffs()) CHECK(c == Complex{});
    }
    SUBCASE("second coefficient of f_0.3 * f_0.4") {
        const auto p = hadamard(two_gon_series(AlphaParam(0.3), 5), two_gon_series(AlphaParam(0.4), 5));
        CHECK(p[2].real() == doctest::Approx(0.12).epsilon(1e-15));
    }
    SUBCASE("commutative and associative") {
        for (int i = 0; i < 100; ++i) {
            const auto a = random_series(rng, 25), b = random_series(rng, 25), c = random_series(rng, 25);
            const auto ab = hadamard(a, b), ba = hadamard(b, a);
            const auto l = hadamard(ab, c), r = hadamard(a, hadamard(b, c));
            for (std::size_t n = 0; n <= 25; ++n) {
                REQUIRE(rel_close(ab[n], ba[n], 1e-15));
                REQUIRE(rel_close(l[n], r[n], 1e-15));
            }
        }
    }
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>(1)), ArgumentError);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{{1.0, 0.0}, {NAN, 0.0}}), NumericalError);
}

TEST_CASE("evaluate") {
    const auto f1 = two_gon_series(AlphaParam(1.0), 100);
    CHECK(evaluate(f1, 0.0) == Complex{});
    CHECK(std::abs(evaluate(f1, 0.5) - 1.0) < 1e-15);
    CHECK_THROWS_AS(evaluate(f1, 1.0), DomainError);
    CHECK_THROWS_AS(evaluate(f1, Complex(0.8, 0.7)), DomainError);

    const auto fh = two_gon_series(AlphaParam(0.5), 2000);
    CHECK(std::abs(evaluate(fh, 0.9).real() - f_alpha_closed(0.5, 0.9)) < 1e-8);

    SUBCASE("closed form at random (alpha, r) within the documented tail bound") {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> ad(0.05, 1.0), rd(0.0, 0.9);
        for (int i = 0; i < 20; ++i) {
            const double a = ad(rng), r = rd(rng);
            const auto s = two_gon_series(AlphaParam(a), 300);
            const double bound = tail_bound(s, r);
            INFO("alpha = " << a << " r = " << r);
            CHECK(std::abs(evaluate(s, r).real() - f_alpha_closed(a, r)) <= bound + 1e-13);
        }
    }
    SUBCASE("rotated maps are rotations of the real map") {
        const double phi = 0.7;
        const auto s = two_gon_series(AlphaParam(0.6, phi), 400);
        const auto real = two_gon_series(AlphaParam(0.6), 400);
        const Complex z(0.3, -0.4);
        const Complex want = std::polar(1.0, -phi) * evaluate(real, std::polar(1.0, phi) * z);
        CHECK(std::abs(evaluate(s, z) - want) < 1e-13);
    }
}

TEST_CASE("coefficient streams") {
    const AlphaParam a(0.6, 0.3);
    const auto s = two_gon_series(a, 200);
    auto stream = two_gon_stream(a)();
    for (std::size_t n = 0; n <= 200; ++n) REQUIRE(std::abs(stream->next() - s[n]) < 1e-15);

    auto stored = series_stream(s)();
    for (std::size_t n = 0; n <= 200; ++n) REQUIRE(stored->next() == s[n]);
    CHECK(stored->next() == Complex{});

    const auto f = hadamard_stream({two_gon_stream(AlphaParam(0.3)), two_gon_stream(AlphaParam(0.4))});
    auto p1 = f();
    auto p2 = f();  // independent cursors
    p1->next();
    p1->next();
    CHECK(p1->next().real() == doctest::Approx(0.12).epsilon(1e-15));
    CHECK(p2->next() == Complex{});
    CHECK_THROWS_AS(hadamard_stream({}), ArgumentError);
}

TEST_CASE("radial_sum of the geometric series") {
    const auto f1 = two_gon_stream(AlphaParam(1.0));
    for (double r : {0.5, 0.9, 0.999}) {
        const std::size_t N = 5000;
        const double want = r * (1.0 - std::pow(r, static_cast<double>(N))) / (1.0 - r);
        CHECK(radial_sum(f1, r, N).real() == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("fit_line") {
    const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
    const auto fit = fit_line(x, y);
    CHECK(fit.intercept == doctest::Approx(1.0));
    CHECK(fit.slope == doctest::Approx(2.0));
    const std::vector<double> same{1, 1};
    CHECK_THROWS_AS(fit_line(same, same), NumericalError);
    CHECK_THROWS_AS(fit_line(std::vector<double>{1.0}, std::vector<double>{1.0}), ArgumentError);
}

TEST_CASE("radial_asymptotic") {
    SUBCASE("single 2-gon, power(alpha)") {
        for (double a : {0.3, 0.5, 0.8}) {
            const auto est = radial_asymptotic(two_gon_stream(AlphaParam(a)),
                                               RadialMode::power(a, a), short_schedule());
            const double want = std::pow(2.0, a - 1.0) / a;
            INFO("alpha = " << a);
            CHECK(est.extrapolated_limit == doctest::Approx(want).epsilon(1e-4));
            CHECK(est.grid.size() == 13);
            for (std::size_t i = 1; i < est.grid.size(); ++i) CHECK(est.grid[i].r > est.grid[i - 1].r);
        }
    }
    SUBCASE("f_1 * f_1 scaled by (1-r) equals r") {
        const auto src = hadamard_stream({two_gon_stream(AlphaParam(1.0)), two_gon_stream(AlphaParam(1.0))});
        const auto est = radial_asymptotic(src, RadialMode::power(1.0, 0.5), short_schedule());
        for (const auto& p : est.grid) CHECK(std::abs(p.scaled_value - p.r) < 1e-12);
    }
    SUBCASE("f_1/2 * f_1/2 in log mode") {
        const auto src = hadamard_stream({two_gon_stream(AlphaParam(0.5)), two_gon_stream(AlphaParam(0.5))});
        const auto est = radial_asymptotic(src, RadialMode::log(), short_schedule());
        CHECK(est.extrapolated_limit == doctest::Approx(2.0 / kPi).epsilon(1e-3));
    }
    SUBCASE("over-scaling decays to zero, exact scaling stays away from zero") {
        const double a = 0.5;
        const auto over = radial_asymptotic(two_gon_stream(AlphaParam(a)), RadialMode::power(0.8, 0.5), short_schedule());
        for (std::size_t i = 1; i < over.grid.size(); ++i)
            CHECK(over.grid[i].scaled_value < over.grid[i - 1].scaled_value);
        CHECK(over.grid.back().scaled_value < 0.15 * over.grid.front().scaled_value);

        const auto exact = radial_asymptotic(two_gon_stream(AlphaParam(a)), RadialMode::power(a, 0.5), short_schedule());
        const double delta = 0.5 * std::pow(2.0, a - 1.0) / a;
        for (const auto& p : exact.grid) CHECK(p.scaled_value >= delta);
    }
    SUBCASE("non-finite sums are reported") {
        StreamFactory bad = [] { return std::make_unique<InfiniteStream>(); };
        RadialSchedule s;
        s.j_max = 10;
        CHECK_THROWS_AS(radial_asymptotic(bad, RadialMode::power(0.5, 0.5), s), NumericalError);
    }
    SUBCASE("schedule validation") {
        RadialSchedule s;
        s.j_min = 10;
        s.j_max = 12;
        CHECK_THROWS_AS(radial_asymptotic(two_gon_stream(AlphaParam(0.5)), RadialMode::log(), s), ArgumentError);
        CHECK(s.truncation(1.0 - std::ldexp(1.0, -10)) == 40u * 1024u);
    }
}
