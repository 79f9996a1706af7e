#include "dzv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace dzv {

Rational::Rational(long value) : value_(value) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    value_.get_num() = numerator;
    value_.get_den() = denominator;
    value_.canonicalize();
}

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    }
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::to_string() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}
Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}
Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}
Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, unsigned exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.gmp().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.gmp().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

Integer binomial_integer(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Rational binomial(unsigned long n, long k) { return Rational(binomial_integer(n, k)); }

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace dzv
