#include "twogon/conv_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "twogon/coeffs.hpp"
#include "twogon/errors.hpp"
#include "twogon/specfun.hpp"

namespace twogon::conv {

namespace {
constexpr std::size_t kMaxFactors = 10'000'000;

void require_unit_interval(double a, const char* what) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError(std::string(what) + ": parameters must lie in (0,1]");
}
}  // namespace

std::string_view to_string(GrowthKind kind) {
    switch (kind) {
        case GrowthKind::Identity: return "Identity";
        case GrowthKind::Bounded: return "Bounded";
        case GrowthKind::Logarithmic: return "Logarithmic";
        case GrowthKind::PowerLaw: return "PowerLaw";
    }
    return "Unknown";
}

GrowthClass classify_pair(double alpha, double beta) {
    require_unit_interval(alpha, "classify_pair");
    require_unit_interval(beta, "classify_pair");
    // B = (1-alpha) + (1-beta), accumulated exactly as classify_sequence does.
    const double B = (0.0 + (1.0 - alpha)) + (1.0 - beta);
    const double lg = specfun::log_gamma(alpha + 1.0) + specfun::log_gamma(beta + 1.0);
    if (B > 1.0 + kBoundaryTol) return GrowthClass::bounded();
    if (std::abs(B - 1.0) <= kBoundaryTol) return GrowthClass::logarithmic(1.0 / (2.0 * std::exp(lg)));
    const double exponent = 1.0 - B;  // alpha + beta - 1
    const double sum_m2 = alpha + beta - 2.0;
    const double constant = std::exp(sum_m2 * std::numbers::ln2 + specfun::log_gamma(exponent) - lg);
    return GrowthClass::power_law(exponent, constant);
}

CoeffProduct infinite_conv_coeff_detail(const SequenceSpec& seq, std::size_t k, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("infinite_conv_coeff: tol must be positive");
    if (k == 0) return {Complex{}, 0, true};
    if (k == 1) return {Complex{1.0, 0.0}, 0, false};

    const double km1 = static_cast<double>(k - 1);
    double log_mod = 0.0;
    double phase = 0.0;
    std::size_t factors = 0;
    for (const auto& a : seq.head()) {
        log_mod += std::log(coeffs::g_single(a.modulus(), k));
        phase += km1 * a.phase();
        ++factors;
    }
    auto result = [&](bool vanished) {
        if (vanished) return CoeffProduct{Complex{}, factors, true};
        return CoeffProduct{std::polar(std::exp(log_mod), phase), factors, false};
    };
    if (seq.is_finite()) return result(false);

    const auto& rule = *seq.tail();
    const double log_tol = std::log(tol);
    auto add_tail_factor = [&](std::size_t m) {
        log_mod += std::log(coeffs::g_single(rule.modulus_at(m), k));
        if (rule.phase_at) phase += km1 * rule.phase_at(m);
        ++factors;
    };

    if (std::isinf(rule.deficit_tail_sum(1))) {
        // Divergent B: every factor is <= 1, so once the running modulus is
        // below tol the limit is pinned in [0, tol) and is in fact 0.
        for (std::size_t m = 1; log_mod >= log_tol; ++m) {
            if (m > kMaxFactors) throw PrecisionError("infinite_conv_coeff: product did not fall below tol");
            add_tail_factor(m);
        }
        return result(true);
    }
    if (rule.phase_at && !rule.phase_tail_sum)
        throw PrecisionError("infinite_conv_coeff: tail phases carry no summability certificate");

    // -log g_k(a) <= -(k-1) log a <= 2 (k-1) (1-a) for a >= 1/2.
    const double c_k = 2.0 * km1;
    std::size_t m = 1;
    while (!(rule.deficit_bound(m) <= 0.5 && c_k * rule.deficit_tail_sum(m) < tol &&
             (!rule.phase_at || km1 * rule.phase_tail_sum(m) < tol))) {
        if (m > kMaxFactors) throw PrecisionError("infinite_conv_coeff: tail certificate did not reach tol");
        add_tail_factor(m);
        ++m;
    }
    return result(false);
}

Complex infinite_conv_coeff(const SequenceSpec& seq, std::size_t k, double tol) {
    return infinite_conv_coeff_detail(seq, k, tol).value;
}

NormalizedSequence normalize_sequence(const SequenceSpec& seq) {
    std::vector<AlphaParam> head;
    head.reserve(seq.head().size());
    std::optional<TailRule> tail;
    if (seq.tail()) {
        tail = *seq.tail();
        tail->phase_at = nullptr;
        tail->phase_tail_sum = nullptr;
    }
    for (const auto& a : seq.head()) head.emplace_back(a.modulus());

    const bool degenerate = seq.tail() && std::isinf(seq.tail()->deficit_tail_sum(1));
    if (degenerate) return {SequenceSpec(std::move(head), std::move(tail)), Complex{1.0, 0.0}, true};

    double phase = 0.0;
    for (const auto& a : seq.head()) phase += a.phase();
    if (seq.tail() && seq.tail()->phase_at) {
        const auto& rule = *seq.tail();
        if (!rule.phase_tail_sum || std::isinf(rule.phase_tail_sum(1)))
            throw PrecisionError("normalize_sequence: phase product not certified convergent");
        constexpr double kPhaseTol = 1e-15;
        for (std::size_t m = 1; rule.phase_tail_sum(m) > kPhaseTol; ++m) {
            if (m > kMaxFactors) throw PrecisionError("normalize_sequence: phase tail did not converge");
            phase += rule.phase_at(m);
        }
    }
    phase = series::wrap_phase(phase);
    if (head.empty()) {
        // Tail-only spec: the rotation lands on the first tail element.
        const double m1 = tail->modulus_at(1);
        auto shifted = *tail;
        shifted.modulus_at = [r = tail->modulus_at](std::size_t m) { return r(m + 1); };
        shifted.deficit_at = [r = tail->deficit_at](std::size_t m) { return r(m + 1); };
        shifted.deficit_bound = [r = tail->deficit_bound](std::size_t m) { return r(m + 1); };
        shifted.deficit_tail_sum = [r = tail->deficit_tail_sum](std::size_t m) { return r(m + 1); };
        head.emplace_back(m1);
        tail = std::move(shifted);
    }
    head.front() = AlphaParam(head.front().modulus(), phase);
    return {SequenceSpec(std::move(head), std::move(tail)), std::polar(1.0, phase), false};
}

VanishingReport vanishing_coeff_diagnostic(const SequenceSpec& seq, std::size_t k0, double tol, std::size_t k_max) {
    if (k0 < 2) throw ArgumentError("vanishing_coeff_diagnostic: k0 must be >= 2");
    if (!seq.is_normalized()) throw ArgumentError("vanishing_coeff_diagnostic: sequence must be normalized");
    VanishingReport report;
    report.k0 = k0;
    const CoeffProduct at_k0 = infinite_conv_coeff_detail(seq, k0, tol);
    report.k0_vanishes = std::abs(at_k0.value) < tol;
    bool all_below = true;
    for (std::size_t k = 2; k <= std::max(k_max, k0); ++k) {
        const CoeffProduct p = infinite_conv_coeff_detail(seq, k, tol);
        all_below = all_below && std::abs(p.value) < tol;
        report.products.emplace_back(k, p);
    }
    report.identity_witnessed = report.k0_vanishes && all_below;
    return report;
}

double g3_supermultiplicativity(double alpha, double beta) {
    if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0))
        throw DomainError("g3_supermultiplicativity: parameters must lie in (0,1)");
    // With g_3(a) = (1 + 2a^2)/3 the margin factors as 2 (1-a^2)(1-b^2) / 9.
    return 2.0 * (1.0 - alpha * alpha) * (1.0 - beta * beta) / 9.0;
}

AngleFold angle_fold(const std::vector<double>& alphas) {
    if (alphas.empty()) throw ArgumentError("angle_fold: need at least one angle");
    for (double a : alphas) require_unit_interval(a, "angle_fold");
    AngleFold out;
    double acc = alphas.front();
    out.partials.push_back(acc);
    bool bounded = false;
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        acc = acc + alphas[i] - 1.0;
        out.partials.push_back(acc);
        if (acc < -kBoundaryTol) bounded = true;
    }
    out.nominal_angle = acc;
    if (bounded)
        out.growth = GrowthClass::bounded();
    else if (std::abs(acc) <= kBoundaryTol)
        out.growth = GrowthClass::logarithmic(std::nullopt);
    else
        out.growth = GrowthClass::power_law(acc, std::nullopt);
    return out;
}

}  // namespace twogon::conv
