#include "dzv/zeta.hpp"

#include "dzv/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dzv {

PiPolynomial zeta_even_exact(int m) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("zeta_even_exact: argument must be even and >= 2");
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m - 1));
    Rational c = Rational(two_pow, factorial(static_cast<unsigned long>(m))) * bernoulli(static_cast<unsigned>(m));
    if ((m / 2) % 2 == 0) c = -c;
    return PiPolynomial::monomial(c, static_cast<unsigned>(m));
}

RealBall zeta_numeric(int s, const PrecisionCtx& ctx) {
    if (s < 2) throw std::invalid_argument("zeta_numeric: s must be >= 2");
    if (s % 2 == 0) return pipoly_eval(zeta_even_exact(s), ctx);
    return hurwitz_zeta(s, Rational(1), ctx);
}

ZetaValue zeta_value(int s, const PrecisionCtx& ctx) {
    ZetaValue z{s, std::nullopt, zeta_numeric(s, ctx)};
    if (s % 2 == 0) z.exact = zeta_even_exact(s);
    return z;
}

Rational euler_maclaurin_coefficient(int s, int k) {
    Integer rising = 1;  // (s)_(2k-1)
    for (int i = 0; i < 2 * k - 1; ++i) rising *= s + i;
    return bernoulli(static_cast<unsigned>(2 * k)) * Rational(rising, factorial(static_cast<unsigned long>(2 * k)));
}

namespace {

constexpr long kMaxLeading = 1L << 16;
constexpr int kMaxCorrections = 1024;

struct Attempt {
    RealBall value;
    Float bound;
};

Attempt hurwitz_attempt(int s, const RealBall& a, long n_terms, int k_terms, mpfr_prec_t prec) {
    RealBall sum(prec);
    for (long n = 0; n < n_terms; ++n) sum += pow(a + RealBall(n, prec), -s);
    const RealBall x = a + RealBall(n_terms, prec);
    const RealBall xinv = inverse(x);
    sum += pow(x, 1 - s) * Rational(1, s - 1);
    sum += pow(x, -s).mul_2si(-1);

    const RealBall xinv2 = xinv * xinv;
    RealBall power = pow(x, -s - 1);
    Integer rising = s;  // (s)_(2k-1)
    RealBall last(prec);
    for (int k = 1; k <= k_terms; ++k) {
        const Rational c = bernoulli(static_cast<unsigned>(2 * k)) *
                           Rational(rising, factorial(static_cast<unsigned long>(2 * k)));
        last = power * c;
        sum += last;
        power *= xinv2;
        rising *= Integer(s + 2 * k - 1) * (s + 2 * k);
    }
    return {std::move(sum), last.abs_upper()};
}

bool bound_meets_target(const Float& bound, const RealBall& value, long bits) {
    Float target = value.abs_lower();
    mpfr_mul_2si(target.get(), target.get(), -bits, MPFR_RNDD);
    return mpfr_cmp(bound.get(), target.get()) <= 0;
}

}  // namespace

RealBall hurwitz_zeta(int s, const RealBall& a, const PrecisionCtx& ctx) {
    if (s < 2) throw std::invalid_argument("hurwitz_zeta: s must be >= 2");
    if (mpfr_cmp_ui(a.lower().get(), 1) < 0) throw std::invalid_argument("hurwitz_zeta: a must be >= 1");
    const mpfr_prec_t prec = ctx.internal_precision();
    const long target_bits = static_cast<long>(ctx.working_precision()) + 8;
    long n_terms = std::max<long>(16, ctx.working_precision() / 4);
    int k_terms = std::clamp<int>(static_cast<int>(ctx.working_precision() / 8), 4, kMaxCorrections);
    for (int attempt = 0;; ++attempt) {
        Attempt r = hurwitz_attempt(s, a, n_terms, k_terms, prec);
        if (bound_meets_target(r.bound, r.value, target_bits)) {
            r.value.add_error(r.bound);
            return r.value;
        }
        if (n_terms >= kMaxLeading && k_terms >= kMaxCorrections)
            throw PrecisionUnreachable("hurwitz_zeta: Euler-Maclaurin caps reached");
        if (attempt % 2 == 0 && n_terms < kMaxLeading) n_terms *= 2;
        else if (k_terms < kMaxCorrections) k_terms *= 2;
        else n_terms *= 2;
    }
}

RealBall hurwitz_zeta(int s, const Rational& a, const PrecisionCtx& ctx) {
    if (!a.is_integer()) return hurwitz_zeta(s, RealBall(a, ctx.internal_precision()), ctx);
    using Key = std::tuple<int, Integer, unsigned>;
    static std::mutex mutex;
    static std::map<Key, RealBall> memo;
    Key key{s, a.numerator(), ctx.working_precision()};
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    RealBall value = hurwitz_zeta(s, RealBall(a, ctx.internal_precision()), ctx);
    std::lock_guard lock(mutex);
    return memo.try_emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace dzv
