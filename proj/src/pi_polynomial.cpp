#include "dzv/pi_polynomial.hpp"

#include "dzv/constants.hpp"

namespace dzv {

PiPolynomial PiPolynomial::monomial(const Rational& coefficient, unsigned exponent) {
    PiPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

Rational PiPolynomial::coefficient(unsigned exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PiPolynomial::add_term(unsigned exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PiPolynomial& PiPolynomial::operator+=(const PiPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

PiPolynomial& PiPolynomial::operator-=(const PiPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

PiPolynomial& PiPolynomial::operator*=(const Rational& q) {
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= q;
    return *this;
}

PiPolynomial operator*(const PiPolynomial& a, const PiPolynomial& b) {
    PiPolynomial r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

std::string PiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!out.empty()) out += " + ";
        out += c.to_string();
        if (k == 1) out += "*pi";
        else if (k > 1) out += "*pi^" + std::to_string(k);
    }
    return out;
}

RealBall pipoly_eval(const PiPolynomial& p, const PrecisionCtx& ctx) {
    const mpfr_prec_t prec = ctx.internal_precision();
    RealBall sum(prec);
    if (p.is_zero()) return sum;
    const RealBall pi = pi_const(ctx);
    for (const auto& [k, c] : p.terms()) sum += pow(pi, static_cast<long>(k)) * c;
    return sum;
}

}  // namespace dzv
