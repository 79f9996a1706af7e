#include "dzv/complex_ball.hpp"

namespace dzv {

ComplexBall& ComplexBall::operator+=(const ComplexBall& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexBall& ComplexBall::operator-=(const ComplexBall& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexBall& ComplexBall::operator*=(const ComplexBall& o) {
    RealBall re = re_ * o.re_ - im_ * o.im_;
    RealBall im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexBall& ComplexBall::operator*=(const RealBall& o) {
    re_ *= o;
    im_ *= o;
    return *this;
}

ComplexBall& ComplexBall::operator*=(const Rational& q) {
    re_ *= q;
    im_ *= q;
    return *this;
}

std::string ComplexBall::to_string(int digits) const {
    return "(" + re_.to_string(digits) + ") + (" + im_.to_string(digits) + ")i";
}

ComplexBall pow(const ComplexBall& z, unsigned long exponent) {
    ComplexBall result(RealBall(1, z.precision()));
    ComplexBall base = z;
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

}  // namespace dzv
