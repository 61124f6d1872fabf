#include <gmpxx.h>

#include <string>

#include "twogon/coeffs.hpp"
#include "twogon/errors.hpp"

namespace twogon::coeffs {

double coeff_direct(double alpha, unsigned n) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("coeff_direct: alpha must lie in (0,1), got " + std::to_string(alpha));
    if (n > kDirectMaxOrder)
        throw PrecisionError("coeff_direct: n = " + std::to_string(n) + " exceeds the direct-formula cap " +
                             std::to_string(kDirectMaxOrder));
    if (n == 0) return 0.0;
    if (n == 1) return 1.0;

    // A double is an exact dyadic rational, so every term below is exact.
    const mpq_class a(alpha);
    mpq_class binom_alpha = 1;  // C(alpha, k), built incrementally
    mpz_class binom_n = 1;      // C(n-1, k-1)
    mpz_class pow2 = 1;
    mpq_class sum = 0;
    for (unsigned k = 1; k <= n; ++k) {
        binom_alpha *= (a - (k - 1));
        binom_alpha /= k;
        if (k > 1) {
            binom_n *= (n - k + 1);
            binom_n /= (k - 1);
        }
        pow2 *= 2;
        sum += mpq_class(pow2 * binom_n) * binom_alpha;
    }
    sum /= 2 * a;
    return sum.get_d();
}

}  // namespace twogon::coeffs
