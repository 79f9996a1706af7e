#pragma once

#include "dzv/complex_ball.hpp"
#include "dzv/precision.hpp"
#include "dzv/real_ball.hpp"

namespace dzv {

// Ball containing pi at ctx.internal_precision(). Memoized per precision.
RealBall pi_const(const PrecisionCtx& ctx);

// Ball containing exp(2 pi i / 3) = -1/2 + (sqrt 3 / 2) i.
ComplexBall cube_root_of_unity(const PrecisionCtx& ctx);

// arctan(1/q) for an integer q >= 2, by its alternating Taylor series.
RealBall arctan_inverse(unsigned long q, mpfr_prec_t precision);

}  // namespace dzv
