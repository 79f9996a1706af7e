#include "dzv/bernoulli.hpp"

#include <stdexcept>

namespace dzv {

BernoulliCache::BernoulliCache() : values_{Rational(1), Rational(-1, 2)} {}

std::size_t BernoulliCache::size() const {
    std::lock_guard lock(mutex_);
    return values_.size();
}

Rational BernoulliCache::get(unsigned m) {
    std::lock_guard lock(mutex_);
    extend_to(m);
    return values_[m];
}

void BernoulliCache::extend_to(unsigned m) {
    while (values_.size() <= m) {
        const unsigned n = static_cast<unsigned>(values_.size());
        if (n % 2 == 1) {
            values_.emplace_back(0);
            continue;
        }
        // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j; odd j >= 3 vanish.
        Rational acc = values_[0] + Rational(n + 1) * values_[1];
        Integer c = binomial_integer(n + 1, 2);
        for (unsigned j = 2; j < n; j += 2) {
            acc += Rational(c) * values_[j];
            // C(n+1, j+2) from C(n+1, j)
            c = c * (n + 1 - j) * (n - j);
            c /= (j + 1) * (j + 2);
        }
        values_.push_back(-acc / Rational(n + 1));
    }
}

Rational bernoulli(unsigned m) {
    static BernoulliCache cache;
    return cache.get(m);
}

Rational bernoulli_convolution(unsigned l, unsigned residue, unsigned modulus) {
    if (modulus == 0 || residue >= modulus) throw std::invalid_argument("bernoulli_convolution: bad residue class");
    Rational sum;
    for (unsigned j = residue; j <= l; j += modulus)
        sum += binomial(l, j) * bernoulli(j) * bernoulli(l - j);
    return sum;
}

IdentityVerdict euler_identity_check(int l) {
    if (l < 4 || l % 2 != 0) throw std::invalid_argument("euler_identity_check: l must be even and >= 4");
    IdentityVerdict v;
    v.weight = l;
    v.label = "euler-bernoulli";
    v.lhs = bernoulli_convolution(static_cast<unsigned>(l), 0, 2);
    v.rhs = -Rational(l - 1) * bernoulli(static_cast<unsigned>(l));
    v.holds = v.lhs == v.rhs;
    return v;
}

namespace {

void require_gap6_weight(int l) {
    if (l < 8 || l % 6 != 2) throw std::invalid_argument("ramanujan: l must satisfy l = 2 (mod 6) and l >= 8");
}

}  // namespace

Rational ramanujan_sum(int l, int m) {
    require_gap6_weight(l);
    if (m != 0 && m != 2 && m != 4) throw std::invalid_argument("ramanujan_sum: m must be 0, 2 or 4");
    return bernoulli_convolution(static_cast<unsigned>(l), static_cast<unsigned>(m), 6);
}

std::array<IdentityVerdict, 3> ramanujan_check(int l) {
    require_gap6_weight(l);
    const Rational rhs = -Rational(l - 1, 3) * bernoulli(static_cast<unsigned>(l));
    std::array<IdentityVerdict, 3> out;
    for (int i = 0; i < 3; ++i) {
        const int m = 2 * i;
        out[i].weight = l;
        out[i].label = "ramanujan m=" + std::to_string(m);
        out[i].lhs = ramanujan_sum(l, m);
        out[i].rhs = rhs;
        out[i].holds = out[i].lhs == out[i].rhs;
    }
    return out;
}

}  // namespace dzv
