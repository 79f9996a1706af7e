#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dzv {

using Integer = mpz_class;

// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value);  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& value);
    Rational(const Integer& numerator, const Integer& denominator);
    Rational(long numerator, long denominator);

    // Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    const mpq_class& gmp() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Integer part and fractional part with 0 <= frac < 1.
    Integer floor() const;
    Rational frac() const;

    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    explicit Rational(mpq_class v);
    mpq_class value_{0};
};

Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);

// C(n, k) exactly; zero outside 0 <= k <= n.
Rational binomial(unsigned long n, long k);
Integer binomial_integer(unsigned long n, long k);
Integer factorial(unsigned long n);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace dzv
