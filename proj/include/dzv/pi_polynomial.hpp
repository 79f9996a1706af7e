#pragma once

#include "dzv/precision.hpp"
#include "dzv/rational.hpp"
#include "dzv/real_ball.hpp"

#include <map>
#include <string>

namespace dzv {

// Finite sum  sum_k c_k * pi^k  with exact rational coefficients. Zero
// coefficients are never stored, so equality is structural.
class PiPolynomial {
public:
    PiPolynomial() = default;
    static PiPolynomial monomial(const Rational& coefficient, unsigned exponent);
    static PiPolynomial constant(const Rational& c) { return monomial(c, 0); }

    const std::map<unsigned, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(unsigned exponent) const;

    PiPolynomial& operator+=(const PiPolynomial& o);
    PiPolynomial& operator-=(const PiPolynomial& o);
    PiPolynomial& operator*=(const Rational& q);

    friend PiPolynomial operator+(PiPolynomial a, const PiPolynomial& b) { return a += b; }
    friend PiPolynomial operator-(PiPolynomial a, const PiPolynomial& b) { return a -= b; }
    friend PiPolynomial operator*(const PiPolynomial& a, const PiPolynomial& b);
    friend PiPolynomial operator*(PiPolynomial a, const Rational& q) { return a *= q; }
    friend PiPolynomial operator*(const Rational& q, PiPolynomial a) { return a *= q; }
    friend bool operator==(const PiPolynomial&, const PiPolynomial&) = default;

    // e.g. "1/6*pi^2 + 3/4"
    std::string to_string() const;

private:
    void add_term(unsigned exponent, const Rational& c);
    std::map<unsigned, Rational> terms_;
};

RealBall pipoly_eval(const PiPolynomial& p, const PrecisionCtx& ctx);

}  // namespace dzv
