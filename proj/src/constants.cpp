#include "dzv/constants.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dzv {

RealBall arctan_inverse(unsigned long q, mpfr_prec_t precision) {
    if (q < 2) throw std::invalid_argument("arctan_inverse: q must be at least 2");
    const Integer q2 = Integer(q) * q;
    Integer power = q;  // q^(2k+1)
    RealBall sum(precision);
    // Stop once the next term is below 2^-(precision + 8); the alternating
    // series remainder is then bounded by that term.
    Integer cutoff;
    mpz_ui_pow_ui(cutoff.get_mpz_t(), 2, static_cast<unsigned long>(precision) + 8);
    for (unsigned long k = 0;; ++k) {
        const Integer den = Integer(2 * k + 1) * power;
        if (den > cutoff) {
            Float bound(RealBall::kRadiusBits);
            mpfr_set_q(bound.get(), Rational(Integer(1), den).gmp().get_mpq_t(), MPFR_RNDU);
            sum.add_error(bound);
            return sum;
        }
        RealBall term(Rational(Integer(1), den), precision);
        if (k % 2 == 0) sum += term;
        else sum -= term;
        power *= q2;
    }
}

RealBall pi_const(const PrecisionCtx& ctx) {
    static std::mutex mutex;
    static std::map<mpfr_prec_t, RealBall> cache;
    const mpfr_prec_t prec = ctx.internal_precision();
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(prec); it != cache.end()) return it->second;
    }
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
    RealBall pi = arctan_inverse(5, prec + 8).mul_2si(4) - arctan_inverse(239, prec + 8).mul_2si(2);
    RealBall rounded = RealBall::from_interval(pi.lower(), pi.upper(), prec);
    std::lock_guard lock(mutex);
    return cache.try_emplace(prec, std::move(rounded)).first->second;
}

ComplexBall cube_root_of_unity(const PrecisionCtx& ctx) {
    const mpfr_prec_t prec = ctx.internal_precision();
    RealBall half_sqrt3 = sqrt(RealBall(3, prec)).mul_2si(-1);
    return ComplexBall(RealBall(Rational(-1, 2), prec), std::move(half_sqrt3));
}

}  // namespace dzv
