#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "twogon/conv_analysis.hpp"
#include "twogon/errors.hpp"
#include "twogon/parallel.hpp"
#include "twogon/rng.hpp"

namespace twogon::conv {

namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArgumentError("unbounded_volume_exact: 128-bit overflow");
    return r;
}

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw ArgumentError("unbounded_volume_exact: 128-bit overflow");
    return r;
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr std::uint64_t kChunkSize = 1u << 16;

}  // namespace

Rational unbounded_volume_exact(unsigned n) {
    if (n < 1) throw ArgumentError("unbounded_volume_exact: n must be >= 1");
    if (n > 20) throw ArgumentError("unbounded_volume_exact: n = " + std::to_string(n) + " exceeds the overflow guard (20)");

    // P(sum U_i >= n-1) = 1 - F(n-1), with the Irwin-Hall CDF
    //   F(x) = (1/n!) sum_{k=0}^{floor x} (-1)^k C(n,k) (x-k)^n.
    i128 factorial = 1;
    for (unsigned i = 2; i <= n; ++i) factorial = checked_mul(factorial, i);
    i128 cdf_numer = 0;
    i128 binom = 1;  // C(n, k)
    for (unsigned k = 0; k + 1 <= n; ++k) {
        const i128 base = static_cast<i128>(n - 1 - k);
        i128 p = 1;
        for (unsigned e = 0; e < n; ++e) p = checked_mul(p, base);
        const i128 term = checked_mul(binom, p);
        cdf_numer = checked_add(cdf_numer, (k % 2 == 0) ? term : -term);
        binom = checked_mul(binom, n - k) / (k + 1);
    }
    i128 num = factorial - cdf_numer;
    i128 den = factorial;
    const i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

ProbabilityEstimate unbounded_probability_mc(unsigned n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 1) throw ArgumentError("unbounded_probability_mc: n must be >= 1");
    if (n > 20) throw ArgumentError("unbounded_probability_mc: n must be <= 20");
    if (samples == 0) throw ArgumentError("unbounded_probability_mc: samples must be positive");

    // Uniforms are drawn as integers m / 2^53, so partial sums are exact and
    // the two counters compare the same numbers.
    constexpr std::uint64_t kOne = std::uint64_t{1} << 53;
    const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    struct Counts {
        std::uint64_t stage = 0, final = 0, disagree = 0;
    };
    std::vector<Counts> per_chunk(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        SplitMix64 rng(chunk_seed(seed, c));
        const std::uint64_t begin = c * kChunkSize;
        const std::uint64_t count = std::min(kChunkSize, samples - begin);
        Counts local;
        for (std::uint64_t s = 0; s < count; ++s) {
            std::uint64_t sum = 0;
            bool stages_ok = true;
            for (unsigned k = 1; k <= n; ++k) {
                sum += rng.next53();
                if (k >= 2 && sum < (k - 1) * kOne) stages_ok = false;
            }
            const bool final_ok = sum >= (n - 1) * kOne;
            local.stage += stages_ok;
            local.final += final_ok;
            local.disagree += stages_ok != final_ok;
        }
        per_chunk[c] = local;
    });

    ProbabilityEstimate est;
    est.n = n;
    est.samples = samples;
    est.seed = seed;
    for (const auto& c : per_chunk) {
        est.stage_count += c.stage;
        est.final_count += c.final;
        est.disagreements += c.disagree;
    }
    est.exact = unbounded_volume_exact(n);
    const double s = static_cast<double>(samples);
    est.estimate = static_cast<double>(est.stage_count) / s;
    est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / s);
    return est;
}

}  // namespace twogon::conv
