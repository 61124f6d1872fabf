#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "twogon/conv_analysis.hpp"
#include "twogon/errors.hpp"
#include "twogon/specfun.hpp"

namespace twogon::conv {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxTailTerms = 10'000'000;
}  // namespace

TailRule const_rule(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw DomainError("const rule: value must lie in (0,1]");
    const double d = 1.0 - x;
    TailRule r;
    r.name = "const:" + std::to_string(x);
    r.modulus_at = [x](std::size_t) { return x; };
    r.deficit_at = [d](std::size_t) { return d; };
    r.deficit_bound = [d](std::size_t) { return d; };
    r.deficit_tail_sum = [d](std::size_t) { return d == 0.0 ? 0.0 : kInf; };
    return r;
}

TailRule fj_rule(unsigned j) {
    if (j < 1) throw DomainError("fj rule: j must be >= 1");
    // alpha_m = exp(-c 2^-m), c = log((j+1)/j); 1 - alpha_m <= c 2^-m.
    const double c = std::log1p(1.0 / static_cast<double>(j));
    TailRule r;
    r.name = "fj:" + std::to_string(j);
    r.modulus_at = [c](std::size_t m) { return std::exp(-std::ldexp(c, -static_cast<int>(m))); };
    r.deficit_at = [c](std::size_t m) { return -std::expm1(-std::ldexp(c, -static_cast<int>(m))); };
    r.deficit_bound = [c](std::size_t m) { return std::ldexp(c, -static_cast<int>(m)); };
    r.deficit_tail_sum = [c](std::size_t m) { return std::ldexp(c, 1 - static_cast<int>(m)); };
    return r;
}

TailRule geom_rule(double base, double ratio) {
    if (!(base >= 0.0 && base < 1.0)) throw DomainError("geom rule: base must lie in [0,1)");
    if (!(ratio >= 0.0 && ratio < 1.0)) throw DomainError("geom rule: ratio must lie in [0,1)");
    auto deficit = [base, ratio](std::size_t m) { return base * std::pow(ratio, static_cast<double>(m - 1)); };
    TailRule r;
    r.name = "geom:" + std::to_string(base) + "," + std::to_string(ratio);
    r.modulus_at = [deficit](std::size_t m) { return 1.0 - deficit(m); };
    r.deficit_at = deficit;
    r.deficit_bound = deficit;
    r.deficit_tail_sum = [deficit, ratio](std::size_t m) { return deficit(m) / (1.0 - ratio); };
    return r;
}

SequenceSpec::SequenceSpec(std::vector<AlphaParam> head, std::optional<TailRule> tail)
    : head_(std::move(head)), tail_(std::move(tail)) {
    if (head_.empty() && !tail_) throw ArgumentError("SequenceSpec: empty sequence");
}

double SequenceSpec::tail_bound_from(std::size_t m) const {
    if (!tail_) return 0.0;
    return tail_->deficit_tail_sum(m);
}

bool SequenceSpec::is_normalized() const {
    for (std::size_t i = 1; i < head_.size(); ++i)
        if (!head_[i].is_real()) return false;
    if (tail_ && tail_->phase_at) return false;
    return true;
}

namespace {

// B enclosure and sum of lnGamma(1 + |alpha_n|). The tail is extended until
// the deficit bound is below tol; by convexity of lnGamma,
// 0 <= -lnGamma(1+a) <= psi(2) (1-a) with psi(2) < 1/2, so the log-product
// tail is certified below tol as well.
struct SeqSums {
    BSum b;
    double log_gamma_sum;
};

SeqSums sequence_sums(const SequenceSpec& seq, double tol) {
    double s = 0.0;
    double lg = 0.0;
    std::size_t terms = 0;
    for (const auto& a : seq.head()) {
        s += 1.0 - a.modulus();
        lg += specfun::log_gamma(1.0 + a.modulus());
        ++terms;
    }
    if (seq.is_finite()) return {{s, s, terms}, lg};
    const auto& rule = *seq.tail();
    if (std::isinf(rule.deficit_tail_sum(1))) return {{kInf, kInf, terms}, -kInf};
    std::size_t m = 1;
    double rest = rule.deficit_tail_sum(m);
    while (rest > tol) {
        if (m > kMaxTailTerms) throw PrecisionError("classify_sequence: tail bound did not reach tolerance");
        s += rule.deficit_at(m);
        lg += specfun::log_gamma(1.0 + rule.modulus_at(m));
        ++terms;
        rest = rule.deficit_tail_sum(++m);
    }
    return {{s, s + rest, terms}, lg};
}

}  // namespace

BSum b_sum(const SequenceSpec& seq, double tol) { return sequence_sums(seq, tol).b; }

GrowthClass classify_sequence(const SequenceSpec& seq) {
    const SeqSums sums = sequence_sums(seq, 1e-15);
    const BSum& b = sums.b;
    if (b.infinite()) return GrowthClass::identity();
    if (b.lo > 1.0 + kBoundaryTol) return GrowthClass::bounded();
    if (b.lo >= 1.0 - kBoundaryTol && b.hi <= 1.0 + kBoundaryTol)
        return GrowthClass::logarithmic(0.5 * std::exp(-sums.log_gamma_sum));
    if (b.hi < 1.0 - kBoundaryTol) {
        const double B = b.lo;
        const double exponent = 1.0 - B;
        const double constant =
            std::exp(specfun::log_gamma(exponent) - B * std::numbers::ln2 - sums.log_gamma_sum);
        return GrowthClass::power_law(exponent, constant);
    }
    throw PrecisionError("classify_sequence: B enclosure [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) +
                         "] straddles the boundary tolerance");
}

}  // namespace twogon::conv
