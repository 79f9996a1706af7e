#pragma once

#include "dzv/errors.hpp"
#include "dzv/pi_polynomial.hpp"
#include "dzv/precision.hpp"
#include "dzv/real_ball.hpp"

#include <optional>

namespace dzv {

struct ZetaValue {
    int argument = 0;
    std::optional<PiPolynomial> exact;  // present iff argument is even
    RealBall numeric;
};

// zeta(m) = (-1)^(m/2+1) 2^(m-1) B_m / m! * pi^m, for even m >= 2.
PiPolynomial zeta_even_exact(int m);

// Certified zeta(s), s >= 2. Even s goes through the exact pi-power form.
RealBall zeta_numeric(int s, const PrecisionCtx& ctx);
ZetaValue zeta_value(int s, const PrecisionCtx& ctx);

// sum_{n>=0} (n + a)^-s for integer s >= 2 and a >= 1 by Euler-Maclaurin:
// N direct terms, K Bernoulli corrections, and the remainder bound
//   |R| <= |B_2K| / (2K)! * |f^(2K-1)(N)|
// added to the radius. N and K are doubled until that bound drops below
// 2^-(P+8) |value|.
RealBall hurwitz_zeta(int s, const RealBall& a, const PrecisionCtx& ctx);
// Memoized for integer a.
RealBall hurwitz_zeta(int s, const Rational& a, const PrecisionCtx& ctx);

// B_2k (s)_(2k-1) / (2k)!, the k-th Euler-Maclaurin coefficient for x^-s.
Rational euler_maclaurin_coefficient(int s, int k);

}  // namespace dzv
