#include "dzv/float.hpp"

#include <cstdio>
#include <vector>

namespace dzv {

Float::Float(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

Float::Float(const Float& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_set_zero(value_, 1);
    mpfr_swap(value_, other.value_);
}

Float& Float::operator=(const Float& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Float& Float::operator=(Float&& other) noexcept {
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

Float::~Float() { mpfr_clear(value_); }

std::string Float::to_string(int digits, mpfr_rnd_t rnd) const {
    if (mpfr_zero_p(value_)) return "0";
    if (!mpfr_number_p(value_)) return mpfr_nan_p(value_) ? "nan" : (mpfr_sgn(value_) > 0 ? "inf" : "-inf");
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    std::string fmt = "%." + std::to_string(digits > 1 ? digits - 1 : 0) + "R*e";
    mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), rnd, value_);
    return buf.data();
}

}  // namespace dzv
