#include "dzv/real_ball.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dzv {

namespace {

constexpr mpfr_prec_t kRad = RealBall::kRadiusBits;

// rad += |mid| * 2^(1 - prec(mid)), covering one round-to-nearest step.
void add_rounding_error(Float& rad, const Float& mid) {
    Float e(kRad);
    mpfr_mul_2si(e.get(), mid.get(), 1 - static_cast<long>(mid.precision()), MPFR_RNDA);
    mpfr_abs(e.get(), e.get(), MPFR_RNDN);
    mpfr_add(rad.get(), rad.get(), e.get(), MPFR_RNDU);
}

// |a| * b rounded up, b >= 0.
void abs_mul_up(Float& out, const Float& a, const Float& b) {
    mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDA);
    mpfr_abs(out.get(), out.get(), MPFR_RNDN);
}

}  // namespace

RealBall::RealBall(mpfr_prec_t precision) : mid_(precision), rad_(kRad) {}

RealBall::RealBall(long value, mpfr_prec_t precision) : mid_(precision), rad_(kRad) {
    if (mpfr_set_si(mid_.get(), value, MPFR_RNDN) != 0) add_rounding_error(rad_, mid_);
}

RealBall::RealBall(const Rational& value, mpfr_prec_t precision) : mid_(precision), rad_(kRad) {
    if (mpfr_set_q(mid_.get(), value.gmp().get_mpq_t(), MPFR_RNDN) != 0) add_rounding_error(rad_, mid_);
}

RealBall::RealBall(Float midpoint, Float radius) : mid_(std::move(midpoint)), rad_(kRad) {
    if (mpfr_sgn(radius.get()) < 0) throw std::invalid_argument("RealBall: negative radius");
    mpfr_set(rad_.get(), radius.get(), MPFR_RNDU);
}

RealBall RealBall::from_interval(const Float& lo, const Float& hi, mpfr_prec_t precision) {
    if (mpfr_cmp(lo.get(), hi.get()) > 0) throw std::invalid_argument("RealBall::from_interval: lo > hi");
    Float mid(precision);
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_mul_2si(mid.get(), mid.get(), -1, MPFR_RNDN);
    Float up(kRad), down(kRad);
    mpfr_sub(up.get(), hi.get(), mid.get(), MPFR_RNDU);
    mpfr_sub(down.get(), mid.get(), lo.get(), MPFR_RNDU);
    if (mpfr_cmp(up.get(), down.get()) < 0) up = down;
    if (mpfr_sgn(up.get()) < 0) mpfr_set_zero(up.get(), 1);
    return RealBall(std::move(mid), std::move(up));
}

Float RealBall::lower() const {
    Float r(precision());
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

Float RealBall::upper() const {
    Float r(precision());
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

Float RealBall::abs_upper() const {
    Float a(precision());
    mpfr_abs(a.get(), mid_.get(), MPFR_RNDN);
    Float r(kRad);
    mpfr_add(r.get(), a.get(), rad_.get(), MPFR_RNDU);
    return r;
}

Float RealBall::abs_lower() const {
    Float a(precision());
    mpfr_abs(a.get(), mid_.get(), MPFR_RNDN);
    Float r(precision());
    mpfr_sub(r.get(), a.get(), rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
    return r;
}

bool RealBall::contains(const Rational& q) const {
    return mpfr_cmp_q(lower().get(), q.gmp().get_mpq_t()) <= 0 &&
           mpfr_cmp_q(upper().get(), q.gmp().get_mpq_t()) >= 0;
}

bool RealBall::contains(const RealBall& inner) const {
    return mpfr_cmp(lower().get(), inner.lower().get()) <= 0 &&
           mpfr_cmp(inner.upper().get(), upper().get()) <= 0;
}

bool RealBall::contains_zero() const {
    return mpfr_sgn(lower().get()) <= 0 && mpfr_sgn(upper().get()) >= 0;
}

bool RealBall::intersects(const RealBall& other) const {
    return mpfr_cmp(lower().get(), other.upper().get()) <= 0 &&
           mpfr_cmp(other.lower().get(), upper().get()) <= 0;
}

bool RealBall::is_positive() const { return mpfr_sgn(lower().get()) > 0; }
bool RealBall::is_negative() const { return mpfr_sgn(upper().get()) < 0; }

RealBall& RealBall::add_error(const Float& err) {
    Float e(kRad);
    mpfr_abs(e.get(), err.get(), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
    return *this;
}

RealBall& RealBall::operator+=(const RealBall& o) {
    Float m(std::max(precision(), o.precision()));
    int inexact = mpfr_add(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    if (inexact != 0) add_rounding_error(rad_, m);
    mid_ = std::move(m);
    return *this;
}

RealBall& RealBall::operator-=(const RealBall& o) {
    Float m(std::max(precision(), o.precision()));
    int inexact = mpfr_sub(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    if (inexact != 0) add_rounding_error(rad_, m);
    mid_ = std::move(m);
    return *this;
}

RealBall& RealBall::operator*=(const RealBall& o) {
    Float m(std::max(precision(), o.precision()));
    int inexact = mpfr_mul(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    Float r(kRad), t(kRad);
    abs_mul_up(r, mid_, o.rad_);
    abs_mul_up(t, o.mid_, rad_);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
    if (inexact != 0) add_rounding_error(r, m);
    mid_ = std::move(m);
    rad_ = std::move(r);
    return *this;
}

RealBall& RealBall::operator/=(const RealBall& o) {
    // |x/y - a/b| <= (|a| s + |b| r) / (|b| (|b| - s)) for x in a+-r, y in b+-s.
    Float den_lo(kRad), babs(kRad);
    mpfr_abs(babs.get(), o.mid_.get(), MPFR_RNDD);
    mpfr_sub(den_lo.get(), babs.get(), o.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(den_lo.get()) <= 0) throw std::domain_error("RealBall: division by a ball containing zero");
    mpfr_mul(den_lo.get(), den_lo.get(), babs.get(), MPFR_RNDD);

    Float m(std::max(precision(), o.precision()));
    int inexact = mpfr_div(m.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
    Float num(kRad), t(kRad);
    abs_mul_up(num, mid_, o.rad_);
    abs_mul_up(t, o.mid_, rad_);
    mpfr_add(num.get(), num.get(), t.get(), MPFR_RNDU);
    Float r(kRad);
    mpfr_div(r.get(), num.get(), den_lo.get(), MPFR_RNDU);
    if (inexact != 0) add_rounding_error(r, m);
    mid_ = std::move(m);
    rad_ = std::move(r);
    return *this;
}

RealBall operator-(RealBall a) {
    mpfr_neg(a.mid_.get(), a.mid_.get(), MPFR_RNDN);
    return a;
}

RealBall& RealBall::operator*=(const Rational& q) { return *this *= RealBall(q, precision()); }

RealBall& RealBall::mul_2si(long exponent) {
    mpfr_mul_2si(mid_.get(), mid_.get(), exponent, MPFR_RNDN);
    mpfr_mul_2si(rad_.get(), rad_.get(), exponent, MPFR_RNDU);
    return *this;
}

std::string RealBall::to_string(int digits) const {
    return mid_.to_string(digits) + " +/- " + rad_.to_string(3, MPFR_RNDU);
}

RealBall sqrt(const RealBall& x) {
    Float hi = x.upper();
    if (mpfr_sgn(hi.get()) < 0) throw std::domain_error("sqrt: ball is negative");
    Float lo = x.lower();
    if (mpfr_sgn(lo.get()) < 0) mpfr_set_zero(lo.get(), 1);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return RealBall::from_interval(lo, hi, x.precision());
}

RealBall pow(const RealBall& x, long exponent) {
    const mpfr_prec_t p = x.precision();
    if (exponent == 0) return RealBall(1, p);
    Float lo = x.lower(), hi = x.upper();
    const bool positive = mpfr_sgn(lo.get()) > 0;
    const bool negative = mpfr_sgn(hi.get()) < 0;
    if (!positive && !negative) {
        if (exponent < 0) throw std::domain_error("pow: negative power of a ball containing zero");
        if (exponent % 2 == 0) {
            Float u(p);
            mpfr_set(u.get(), x.abs_upper().get(), MPFR_RNDU);
            mpfr_pow_si(u.get(), u.get(), exponent, MPFR_RNDU);
            return RealBall::from_interval(Float(p), u, p);
        }
        mpfr_pow_si(lo.get(), lo.get(), exponent, MPFR_RNDD);
        mpfr_pow_si(hi.get(), hi.get(), exponent, MPFR_RNDU);
        return RealBall::from_interval(lo, hi, p);
    }
    if (negative) {
        RealBall r = pow(-x, exponent);
        return (exponent % 2 == 0) ? r : -r;
    }
    Float a(p), b(p);
    if (exponent > 0) {
        mpfr_pow_si(a.get(), lo.get(), exponent, MPFR_RNDD);
        mpfr_pow_si(b.get(), hi.get(), exponent, MPFR_RNDU);
    } else {
        mpfr_pow_si(a.get(), hi.get(), exponent, MPFR_RNDD);
        mpfr_pow_si(b.get(), lo.get(), exponent, MPFR_RNDU);
    }
    return RealBall::from_interval(a, b, p);
}

RealBall inverse(const RealBall& x) { return RealBall(1, x.precision()) / x; }

RealBall abs(const RealBall& x) {
    if (x.is_positive()) return x;
    if (x.is_negative()) return -x;
    return RealBall::from_interval(Float(x.precision()), x.abs_upper(), x.precision());
}

ZeroCertificate ball_is_zero_within(const RealBall& x, const Rational& tolerance) {
    if (tolerance.sign() <= 0) throw std::invalid_argument("ball_is_zero_within: tolerance must be positive");
    ZeroCertificate c;
    mpfr_abs(c.midpoint_abs.get(), x.mid().get(), MPFR_RNDU);
    mpfr_set(c.radius.get(), x.rad().get(), MPFR_RNDU);
    Float total(RealBall::kRadiusBits);
    mpfr_add(total.get(), c.midpoint_abs.get(), c.radius.get(), MPFR_RNDU);
    c.holds = mpfr_cmp_q(total.get(), tolerance.gmp().get_mpq_t()) <= 0;
    return c;
}

std::string certified_digits(const RealBall& x) {
    const std::string annotation = " +/- " + x.rad().to_string(2, MPFR_RNDU);
    Float lo = x.lower(), hi = x.upper();
    if (mpfr_sgn(lo.get()) * mpfr_sgn(hi.get()) <= 0) return "0" + annotation;

    const bool neg = mpfr_sgn(lo.get()) < 0;
    if (neg) {
        mpfr_neg(lo.get(), lo.get(), MPFR_RNDN);
        mpfr_neg(hi.get(), hi.get(), MPFR_RNDN);
    }
    const std::size_t n = static_cast<std::size_t>(x.precision() * 0.30103) + 2;
    auto digits_of = [n](const Float& v, mpfr_exp_t& e) {
        char* s = mpfr_get_str(nullptr, &e, 10, n, v.get(), MPFR_RNDZ);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    };
    mpfr_exp_t elo = 0, ehi = 0;
    const std::string dlo = digits_of(lo, elo);
    const std::string dhi = digits_of(hi, ehi);
    std::size_t k = 0;
    if (elo == ehi)
        while (k < dlo.size() && k < dhi.size() && dlo[k] == dhi[k]) ++k;
    if (k == 0) return x.mid().to_string(3) + annotation;

    std::string prefix = dlo.substr(0, k);
    std::string out = neg ? "-" : "";
    if (elo > 0) {
        if (static_cast<std::size_t>(elo) >= prefix.size()) {
            // Only the integer part is certified; do not pad with unverified zeros.
            out += prefix + "e" + std::to_string(elo - static_cast<long>(prefix.size()));
        } else {
            out += prefix.substr(0, static_cast<std::size_t>(elo)) + "." + prefix.substr(static_cast<std::size_t>(elo));
        }
    } else {
        out += "0." + std::string(static_cast<std::size_t>(-elo), '0') + prefix;
    }
    return out + annotation;
}

}  // namespace dzv
