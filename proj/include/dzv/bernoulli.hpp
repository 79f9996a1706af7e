#pragma once

#include "dzv/rational.hpp"

#include <array>
#include <mutex>
#include <string>
#include <vector>

namespace dzv {

// B_m from X/(e^X - 1) (so B_1 = -1/2), grown on demand by
//   sum_{j=0}^{m} C(m+1, j) B_j = 0.
// Extension is serialized; returned values are copies.
class BernoulliCache {
public:
    BernoulliCache();
    Rational get(unsigned m);
    std::size_t size() const;

private:
    void extend_to(unsigned m);
    mutable std::mutex mutex_;
    std::vector<Rational> values_;
};

// Process-wide cache.
Rational bernoulli(unsigned m);

struct IdentityVerdict {
    Rational lhs;
    Rational rhs;
    bool holds = false;
    int weight = 0;
    std::string label;
};

// sum_{0<=j<=l, j = residue mod modulus} C(l,j) B_j B_{l-j}, no hypotheses on l.
Rational bernoulli_convolution(unsigned l, unsigned residue, unsigned modulus);

// sum_{j even} C(l,j) B_j B_{l-j} == -(l-1) B_l, l even and >= 4.
IdentityVerdict euler_identity_check(int l);

// The gap-6 convolution over j = m (mod 6); l = 2 (mod 6), l >= 8, m in {0,2,4}.
Rational ramanujan_sum(int l, int m);

// Verdicts for m = 0, 2, 4 against -((l-1)/3) B_l.
std::array<IdentityVerdict, 3> ramanujan_check(int l);

}  // namespace dzv
