#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>

#include "twogon/errors.hpp"
#include "twogon/specfun.hpp"

using namespace twogon;
using namespace twogon::specfun;

namespace {

bool close_mixed(double got, double want, double tol) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("log_gamma examples") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK(close_mixed(log_gamma(6.0), std::log(120.0), 1e-14));
    // mpmath, 50 digits
    CHECK(close_mixed(log_gamma(0.5), 0.57236494292470008707, 1e-14));
}

TEST_CASE("log_gamma against a high-precision reference") {
    // lnGamma(x) from mpmath at 50 significant digits, rounded to 20.
    const std::pair<double, double> table[] = {
        {0.5, 0.57236494292470008707},   {0.75, 0.20328095143129537148},  {1.5, -0.12078223763524522235},
        {2.5, 0.28468287047291915963},   {3.3, 0.98709857789473458788},   {7.25, 7.0521854507385394449},
        {10.5, 13.940625219403763633},   {33.3, 82.603723581654952928},   {80.125, 269.83816632045799806},
        {120.5, 455.41760044623451043},  {169.75, 700.15423467042130674},
    };
    for (const auto& [x, want] : table) {
        INFO("x = " << x);
        CHECK(std::abs(log_gamma(x) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("log_gamma agrees with std::lgamma on [0.5, 170]") {
    for (double x = 0.5; x <= 170.0; x += 0.37) {
        INFO("x = " << x);
        CHECK(close_mixed(log_gamma(x), std::lgamma(x), 1e-13));
    }
}

TEST_CASE("log_gamma recurrence Gamma(x+1) = x Gamma(x)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.5, 80.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = dist(rng);
        const double lhs = std::exp(log_gamma(x + 1.0));
        const double rhs = x * std::exp(log_gamma(x));
        REQUIRE(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
}

TEST_CASE("log_gamma domain errors") {
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(PosReal(0.0), DomainError);
}

TEST_CASE("gamma_ratio_coeff") {
    CHECK(gamma_ratio_coeff(0, 0.3) == 1.0);
    CHECK(gamma_ratio_coeff(1, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(gamma_ratio_coeff(2, 0.5) == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(gamma_ratio_coeff(12345, 1.0) == 1.0);
    CHECK_THROWS_AS(gamma_ratio_coeff(3, 0.0), DomainError);
    CHECK_THROWS_AS(gamma_ratio_coeff(3, 1.5), DomainError);

    SUBCASE("matches the Gamma-function definition at moderate n") {
        for (double a : {0.1, 0.25, 0.5, 0.9}) {
            for (std::uint64_t n : {5u, 19u, 20u, 21u, 100u, 150u}) {
                const double want = std::exp(std::lgamma(n + a) - std::lgamma(a) - std::lgamma(n + 1.0));
                CHECK(gamma_ratio_coeff(n, a) == doctest::Approx(want).epsilon(1e-12));
            }
        }
    }

    SUBCASE("successive ratio (n + alpha)/(n + 1) up to n = 1e6") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::uint64_t> nd(0, 1'000'000);
        std::uniform_real_distribution<double> ad(0.01, 1.0);
        auto check_at = [](std::uint64_t n, double a) {
            const double ratio = gamma_ratio_coeff(n + 1, a) / gamma_ratio_coeff(n, a);
            const double want = (static_cast<double>(n) + a) / (static_cast<double>(n) + 1.0);
            INFO("n = " << n << " alpha = " << a);
            CHECK(std::abs(ratio - want) <= 1e-12 * want);
        };
        for (int i = 0; i < 2000; ++i) check_at(nd(rng), ad(rng));
        for (std::uint64_t n : {0u, 18u, 19u, 20u, 999'999u, 1'000'000u}) check_at(n, 0.37);
    }
}

TEST_CASE("binom_real") {
    CHECK(binom_real(0.7, 0) == 1.0);
    CHECK(binom_real(0.7, 1) == doctest::Approx(0.7).epsilon(1e-16));
    CHECK(binom_real(0.5, 2) == -0.125);
    CHECK(binom_real(-1.0, 5) == -1.0);
    CHECK_THROWS_AS(binom_real(std::numeric_limits<double>::infinity(), 2), DomainError);

    SUBCASE("integer arguments reproduce the integer binomial") {
        for (unsigned m = 0; m <= 40; ++m) {
            std::uint64_t exact = 1;  // C(m, k)
            for (unsigned k = 0; k <= m; ++k) {
                const double got = binom_real(m, k);
                INFO("C(" << m << "," << k << ")");
                CHECK(std::abs(got - static_cast<double>(exact)) <=
                      2.0 * k * std::numeric_limits<double>::epsilon() * static_cast<double>(exact));
                exact = exact * (m - k) / (k + 1);
            }
            CHECK(binom_real(m, m + 1) == 0.0);
        }
    }
}
