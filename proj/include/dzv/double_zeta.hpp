#pragma once

#include "dzv/complex_ball.hpp"
#include "dzv/errors.hpp"
#include "dzv/precision.hpp"
#include "dzv/real_ball.hpp"

#include <vector>

namespace dzv {

// Index of zeta(l1, l2) = sum_{m1 > m2 > 0} m1^-l1 m2^-l2; needs l1 >= 2, l2 >= 1.
struct IndexPair {
    int l1;
    int l2;

    IndexPair(int first, int second);
    int weight() const { return l1 + l2; }
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// Certified zeta(l1, l2).
//
// The outer sum is split at M:
//   sum_{m<=M} m^-l2 zeta(l1, m+1)  +  sum_{m>M} m^-l2 zeta(l1, m+1).
// The head walks zeta(l1, m+1) down from a single Hurwitz value using
// zeta(s, m) = zeta(s, m+1) + m^-s. In the tail the inner Hurwitz value is
// replaced by its Euler-Maclaurin expansion in 1/m,
//   zeta(s, m+1) = m^(1-s)/(s-1) - m^-s/2 + sum_k c_k(s) m^(-s-2k+1) + R_K(m),
// which turns the tail into Hurwitz values zeta(l-1, M+1), zeta(l, M+1),
// zeta(l+2k-1, M+1). |R_K(m)| <= |c_K(s)| m^(-s-2K+1), so the dropped part
// is at most |c_K(l1)| zeta(l+2K-1, M+1), which goes into the radius.
RealBall double_zeta(const IndexPair& p, const PrecisionCtx& ctx);

// All zeta(l1, l2) of one weight, indexed by l1 = 2 .. weight-1.
class DzvTable {
public:
    DzvTable(int weight, PrecisionCtx ctx, std::vector<RealBall> entries, RealBall zeta_weight);

    int weight() const { return weight_; }
    const PrecisionCtx& ctx() const { return ctx_; }
    std::size_t size() const { return entries_.size(); }
    std::vector<IndexPair> pairs() const;
    const RealBall& at(const IndexPair& p) const;
    const RealBall& at(int l1) const;
    // zeta(weight).
    const RealBall& zeta_weight() const { return zeta_weight_; }

private:
    int weight_;
    PrecisionCtx ctx_;
    std::vector<RealBall> entries_;
    RealBall zeta_weight_;
};

// Entries are evaluated independently, on up to `jobs` threads.
DzvTable build_table(int weight, const PrecisionCtx& ctx, unsigned jobs = 1);

struct GenPolyValue {
    int weight;
    ComplexBall x;
    ComplexBall y;
    ComplexBall value;
};

// T_l(x, y) = sum x^(l1-1) y^(l2-1) zeta(l1, l2), with z^0 = 1 for every z.
GenPolyValue gen_poly_eval(const DzvTable& t, const ComplexBall& x, const ComplexBall& y);

// sum_{i+j=n} x^i y^j, i.e. (x^(n+1) - y^(n+1)) / (x - y) without the pole at x = y.
ComplexBall homogeneous_divided_difference(const ComplexBall& x, const ComplexBall& y, unsigned n);

// zeta(a) zeta(b) - zeta(a,b) - zeta(b,a) - zeta(a+b).
RealBall harmonic_check(int a, int b, const PrecisionCtx& ctx);

// sum zeta(l1, l2) - zeta(l).
RealBall sum_formula_check(const DzvTable& t);

// sum 2^(l1-1) zeta(l1, l2) - (l+1)/2 zeta(l).
RealBall weighted_sum_check(const DzvTable& t);

// T(x+y, y) + T(y+x, x) - T(x, y) - T(y, x) - sum_{i+j=l-2} x^i y^j zeta(l).
ComplexBall functional_eq26_check(const DzvTable& t, const ComplexBall& x, const ComplexBall& y);
ComplexBall functional_eq26_check(int l, const ComplexBall& x, const ComplexBall& y, const PrecisionCtx& ctx);

}  // namespace dzv
