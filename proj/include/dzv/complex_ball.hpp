#pragma once

#include "dzv/real_ball.hpp"

#include <algorithm>
#include <string>

namespace dzv {

// Rectangular enclosure: independent balls for the real and imaginary parts.
class ComplexBall {
public:
    explicit ComplexBall(mpfr_prec_t precision = 64) : re_(precision), im_(precision) {}
    ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit ComplexBall(RealBall re) : re_(std::move(re)), im_(re_.precision()) {}
    ComplexBall(const Rational& re, const Rational& im, mpfr_prec_t precision)
        : re_(re, precision), im_(im, precision) {}

    const RealBall& real() const { return re_; }
    const RealBall& imag() const { return im_; }
    mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool contains(const Rational& re, const Rational& im) const { return re_.contains(re) && im_.contains(im); }
    bool intersects(const ComplexBall& o) const { return re_.intersects(o.re_) && im_.intersects(o.im_); }

    ComplexBall conj() const { return ComplexBall(re_, -im_); }

    ComplexBall& operator+=(const ComplexBall& o);
    ComplexBall& operator-=(const ComplexBall& o);
    ComplexBall& operator*=(const ComplexBall& o);
    ComplexBall& operator*=(const RealBall& o);
    ComplexBall& operator*=(const Rational& q);

    friend ComplexBall operator+(ComplexBall a, const ComplexBall& b) { return a += b; }
    friend ComplexBall operator-(ComplexBall a, const ComplexBall& b) { return a -= b; }
    friend ComplexBall operator*(ComplexBall a, const ComplexBall& b) { return a *= b; }
    friend ComplexBall operator*(ComplexBall a, const RealBall& b) { return a *= b; }
    friend ComplexBall operator*(ComplexBall a, const Rational& q) { return a *= q; }
    friend ComplexBall operator*(const Rational& q, ComplexBall a) { return a *= q; }
    friend ComplexBall operator-(const ComplexBall& a) { return ComplexBall(-a.re_, -a.im_); }

    std::string to_string(int digits = 20) const;

private:
    RealBall re_;
    RealBall im_;
};

// z^n for n >= 0 by repeated squaring; z^0 is exactly 1 for every z.
ComplexBall pow(const ComplexBall& z, unsigned long exponent);

}  // namespace dzv
