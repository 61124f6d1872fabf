#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twogon/series.hpp"

namespace twogon::conv {

using series::AlphaParam;
using Complex = std::complex<double>;

/// Boundary tolerance for the alpha+beta = 1 and B = 1 decisions. Inputs
/// within this distance of the boundary resolve to Logarithmic.
inline constexpr double kBoundaryTol = 1e-12;

enum class GrowthKind { Identity, Bounded, Logarithmic, PowerLaw };

std::string_view to_string(GrowthKind kind);

/// Growth at z -> 1: PowerLaw means |f(r)| ~ constant (1-r)^(-exponent),
/// Logarithmic means f(r) ~ constant (-log(1-r)).
struct GrowthClass {
    GrowthKind kind = GrowthKind::Bounded;
    std::optional<double> exponent;
    std::optional<double> constant;

    static GrowthClass identity() { return {GrowthKind::Identity, {}, {}}; }
    static GrowthClass bounded() { return {GrowthKind::Bounded, {}, {}}; }
    static GrowthClass logarithmic(std::optional<double> c) { return {GrowthKind::Logarithmic, {}, c}; }
    static GrowthClass power_law(double e, std::optional<double> c) { return {GrowthKind::PowerLaw, e, c}; }
};

// --- parameter sequences ----------------------------------------------------

/// Rule generating the tail alpha_1, alpha_2, ... (1-based within the tail).
/// deficit_bound(m) >= 1 - modulus_at(m) must be non-increasing in m, and
/// deficit_tail_sum(m) = sum_{i >= m} deficit_bound(i) (+inf if divergent).
struct TailRule {
    std::string name;
    std::function<double(std::size_t)> modulus_at;
    std::function<double(std::size_t)> deficit_at;  // 1 - modulus_at(m), computed without cancellation
    std::function<double(std::size_t)> deficit_bound;
    std::function<double(std::size_t)> deficit_tail_sum;
    // Optional rotation of tail entries with a summability certificate
    // phase_tail_sum(m) >= sum_{i >= m} |phase_at(i)|.
    std::function<double(std::size_t)> phase_at;
    std::function<double(std::size_t)> phase_tail_sum;
};

/// alpha_n = x for every n.
TailRule const_rule(double x);
/// alpha_n = (j/(j+1))^(2^-n): the moduli multiply to j/(j+1).
TailRule fj_rule(unsigned j);
/// 1 - alpha_n = base * ratio^(n-1), so B = base / (1 - ratio).
TailRule geom_rule(double base, double ratio);

/// Explicit head followed by an optional rule-generated tail.
class SequenceSpec {
public:
    explicit SequenceSpec(std::vector<AlphaParam> head, std::optional<TailRule> tail = std::nullopt);

    const std::vector<AlphaParam>& head() const noexcept { return head_; }
    const std::optional<TailRule>& tail() const noexcept { return tail_; }
    bool is_finite() const noexcept { return !tail_.has_value(); }

    /// Sum of tail deficit bounds from tail index m (0 for finite specs).
    double tail_bound_from(std::size_t m) const;
    /// True when only the first element carries a phase.
    bool is_normalized() const;

private:
    std::vector<AlphaParam> head_;
    std::optional<TailRule> tail_;
};

/// Certified enclosure lo <= B <= hi of B = sum (1 - |alpha_n|).
struct BSum {
    double lo;
    double hi;
    std::size_t terms;
    bool infinite() const noexcept { return lo == std::numeric_limits<double>::infinity(); }
};

BSum b_sum(const SequenceSpec& seq, double tol = 1e-15);

// --- classification ---------------------------------------------------------

/// Growth of f_alpha * f_beta for alpha, beta in (0,1].
GrowthClass classify_pair(double alpha, double beta);

/// Growth of lim f_{alpha_1} * ... * f_{alpha_n} (moduli). B = infinity gives
/// Identity. Throws PrecisionError when the tail cannot resolve B against the
/// boundary tolerance.
GrowthClass classify_sequence(const SequenceSpec& seq);

// --- infinite convolution ---------------------------------------------------

struct CoeffProduct {
    Complex value;
    std::size_t factors = 0;  // factors multiplied before the stopping rule fired
    bool vanished = false;    // limit certified to be exactly 0
};

/// k-th coefficient prod_n g_k(|alpha_n|) e^{i (k-1) phase_n} of the limit.
/// Finite-B tails are extended until 2(k-1) * (remaining deficit bound) < tol
/// (a bound on the remaining log-product, from g_k(a) >= a^(k-1)). Divergent
/// tails are extended until the running modulus drops below tol, after which
/// the limit is exactly 0 since every factor is <= 1.
CoeffProduct infinite_conv_coeff_detail(const SequenceSpec& seq, std::size_t k, double tol);
Complex infinite_conv_coeff(const SequenceSpec& seq, std::size_t k, double tol);

struct NormalizedSequence {
    SequenceSpec sequence;
    Complex lambda;
    bool degenerate;
};

/// Moves all phases onto the first element (beta_1 = lambda |alpha_1|).
/// degenerate = true when prod |alpha_n| -> 0, i.e. the limit is f(z) = z.
NormalizedSequence normalize_sequence(const SequenceSpec& seq);

struct VanishingReport {
    std::size_t k0;
    bool k0_vanishes = false;
    bool identity_witnessed = false;
    std::vector<std::pair<std::size_t, CoeffProduct>> products;  // k = 2..k_max
};

/// Numerical witness that a vanishing k0-th coefficient forces the identity:
/// when |c_{k0}| < tol, every coefficient 2 <= k <= k_max must also fall below tol.
VanishingReport vanishing_coeff_diagnostic(const SequenceSpec& seq, std::size_t k0, double tol,
                                           std::size_t k_max = 10);

/// g_3(ab) - g_3(a) g_3(b) for a, b in (0,1); strictly positive.
double g3_supermultiplicativity(double alpha, double beta);

// --- angles at infinity -----------------------------------------------------

struct AngleFold {
    GrowthClass growth;            // PowerLaw exponent = nominal angle / pi
    double nominal_angle = 0.0;    // sum alpha_i - (n-1), in units of pi
    std::vector<double> partials;  // running folds a o b = a + b - 1
};

/// Left fold of angles at infinity (units of pi). Bounded as soon as a
/// running fold drops below -kBoundaryTol. The reported angle is nominal: it
/// is exact only when every factor admits a sector of minimal amplitude.
AngleFold angle_fold(const std::vector<double>& alphas);

// --- probability ------------------------------------------------------------

struct Rational {
    std::int64_t num;
    std::int64_t den;
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Volume of {a in [0,1]^n : a_1 + ... + a_n >= n-1} by inclusion-exclusion
/// over the Irwin-Hall distribution, exact. Requires 1 <= n <= 20.
Rational unbounded_volume_exact(unsigned n);

inline constexpr std::uint64_t kDefaultSeed = 42;

struct ProbabilityEstimate {
    unsigned n = 0;
    Rational exact{1, 1};
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t stage_count = 0;  // all partial sums a_1+..+a_k >= k-1
    std::uint64_t final_count = 0;  // only a_1+..+a_n >= n-1
    std::uint64_t disagreements = 0;
};

/// Monte Carlo estimate of the probability that n uniform angles keep the
/// convolution unbounded. Deterministic in (n, samples, seed) regardless of
/// thread count. Requires 1 <= n <= 20.
ProbabilityEstimate unbounded_probability_mc(unsigned n, std::uint64_t samples, std::uint64_t seed = kDefaultSeed);

}  // namespace twogon::conv
