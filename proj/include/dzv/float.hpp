#pragma once

#include <mpfr.h>

#include <string>

namespace dzv {

// Owning RAII handle around an mpfr_t. Copies keep the source precision.
class Float {
public:
    explicit Float(mpfr_prec_t precision = 64);
    Float(const Float& other);
    Float(Float&& other) noexcept;
    Float& operator=(const Float& other);
    Float& operator=(Float&& other) noexcept;
    ~Float();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    // Scientific notation with `digits` significant decimal digits.
    std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

private:
    mpfr_t value_;
};

}  // namespace dzv
