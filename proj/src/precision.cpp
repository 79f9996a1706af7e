#include "dzv/precision.hpp"

#include <stdexcept>

namespace dzv {

PrecisionCtx::PrecisionCtx(unsigned working_precision, Rational target_tolerance)
    : working_precision_(working_precision), target_tolerance_(std::move(target_tolerance)) {
    if (working_precision_ < kMinimumBits)
        throw std::invalid_argument("PrecisionCtx: working precision must be at least 64 bits");
    if (target_tolerance_.sign() <= 0)
        throw std::invalid_argument("PrecisionCtx: tolerance must be positive");
}

PrecisionCtx PrecisionCtx::with_decimal_tolerance(unsigned working_precision, unsigned exponent) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, exponent);
    return PrecisionCtx(working_precision, Rational(Integer(1), den));
}

}  // namespace dzv
