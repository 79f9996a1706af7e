#pragma once

#include "dzv/rational.hpp"

#include <mpfr.h>

namespace dzv {

// Working precision plus the residual tolerance used by identity checks.
class PrecisionCtx {
public:
    static constexpr unsigned kMinimumBits = 64;
    static constexpr unsigned kGuardBits = 64;

    explicit PrecisionCtx(unsigned working_precision = 128,
                          Rational target_tolerance = Rational(1, 1L << 30));

    // Tolerance 10^-exponent.
    static PrecisionCtx with_decimal_tolerance(unsigned working_precision, unsigned exponent);

    unsigned working_precision() const { return working_precision_; }
    const Rational& target_tolerance() const { return target_tolerance_; }

    // Precision used for midpoints of intermediate results.
    mpfr_prec_t internal_precision() const { return working_precision_ + kGuardBits; }

    PrecisionCtx doubled() const { return PrecisionCtx(2 * working_precision_, target_tolerance_); }

private:
    unsigned working_precision_;
    Rational target_tolerance_;
};

}  // namespace dzv
