#pragma once

#include "dzv/float.hpp"
#include "dzv/rational.hpp"

#include <string>

namespace dzv {

// Midpoint-radius enclosure of a real number. The midpoint carries the
// working precision; the radius is a short float that is only ever rounded
// upward, so every operation returns a ball containing all pointwise results.
class RealBall {
public:
    static constexpr mpfr_prec_t kRadiusBits = 64;

    // Exact zero.
    explicit RealBall(mpfr_prec_t precision = 64);
    RealBall(long value, mpfr_prec_t precision);
    RealBall(const Rational& value, mpfr_prec_t precision);
    RealBall(Float midpoint, Float radius);

    // Smallest representable ball containing [lo, hi].
    static RealBall from_interval(const Float& lo, const Float& hi, mpfr_prec_t precision);

    mpfr_prec_t precision() const { return mid_.precision(); }
    const Float& mid() const { return mid_; }
    const Float& rad() const { return rad_; }
    double mid_double() const { return mid_.to_double(); }

    bool is_exact() const { return mpfr_zero_p(rad_.get()); }

    // Directed bounds of the enclosure.
    Float lower() const;
    Float upper() const;
    // Upper bound of |x| over the ball.
    Float abs_upper() const;
    // Lower bound of |x| over the ball (zero if the ball straddles zero).
    Float abs_lower() const;

    bool contains(const Rational& q) const;
    bool contains(const RealBall& inner) const;
    bool contains_zero() const;
    bool intersects(const RealBall& other) const;
    bool is_positive() const;
    bool is_negative() const;

    // Enlarge the radius by a nonnegative error bound.
    RealBall& add_error(const Float& err);

    RealBall& operator+=(const RealBall& o);
    RealBall& operator-=(const RealBall& o);
    RealBall& operator*=(const RealBall& o);
    RealBall& operator/=(const RealBall& o);

    friend RealBall operator+(RealBall a, const RealBall& b) { return a += b; }
    friend RealBall operator-(RealBall a, const RealBall& b) { return a -= b; }
    friend RealBall operator*(RealBall a, const RealBall& b) { return a *= b; }
    friend RealBall operator/(RealBall a, const RealBall& b) { return a /= b; }
    friend RealBall operator-(RealBall a);

    RealBall& operator*=(const Rational& q);
    friend RealBall operator*(RealBall a, const Rational& q) { return a *= q; }
    friend RealBall operator*(const Rational& q, RealBall a) { return a *= q; }

    RealBall& mul_2si(long exponent);

    // "m +/- r" with the midpoint to `digits` significant digits.
    std::string to_string(int digits = 20) const;

private:
    Float mid_;
    Float rad_;
};

RealBall sqrt(const RealBall& x);
// Integer power; a negative exponent needs a ball excluding zero.
RealBall pow(const RealBall& x, long exponent);
RealBall inverse(const RealBall& x);
RealBall abs(const RealBall& x);

// Upper bound of |x| + rad(x) compared against a rational tolerance.
struct ZeroCertificate {
    bool holds = false;
    Float midpoint_abs{RealBall::kRadiusBits};
    Float radius{RealBall::kRadiusBits};
};

ZeroCertificate ball_is_zero_within(const RealBall& x, const Rational& tolerance);

// Certified decimal digits: the common prefix of both ends of the ball.
std::string certified_digits(const RealBall& x);

}  // namespace dzv
