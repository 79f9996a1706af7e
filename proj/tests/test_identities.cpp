#include "dzv/constants.hpp"
#include "dzv/identities.hpp"
#include "dzv/zeta.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace dzv;
using F = CongruenceFilter;

namespace {

const PrecisionCtx kCtx = PrecisionCtx::with_decimal_tolerance(192, 40);

const DzvTable& table(int l) {
    static std::map<int, DzvTable> cache;
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, build_table(l, kCtx)).first;
    return it->second;
}

const RealBall& real(const Quantity& q) { return std::get<RealBall>(q); }

bool zero_within(const RealBall& r) { return r.contains_zero() && ball_is_zero_within(r, kCtx.target_tolerance()).holds; }

RealBall pi_power(const Rational& c, unsigned k) { return pipoly_eval(PiPolynomial::monomial(c, k), kCtx); }

}  // namespace

TEST(Residue, Canonicalization) {
    EXPECT_EQ(Residue(-1, 3), Residue(2, 3));
    EXPECT_EQ(Residue(14, 6), Residue(2, 6));
    EXPECT_THROW(Residue(0, 4), std::invalid_argument);
    for (int r3 = 0; r3 < 3; ++r3)
        for (int r2 = 0; r2 < 2; ++r2) {
            const Residue r = combine_mod6(r3, r2);
            EXPECT_EQ(r.residue % 3, r3);
            EXPECT_EQ(r.residue % 2, r2);
        }
}

TEST(RestrictedSum, Examples) {
    const RealBall only44 = restricted_sum(table(8), SumSpec{}.add(1, F::both(4, 6, 4, 6)));
    EXPECT_EQ(mpfr_cmp(only44.mid().get(), table(8).at(IndexPair(4, 4)).mid().get()), 0);
    EXPECT_TRUE(only44.intersects(pi_power(Rational(1, 113400), 8)));

    const RealBall empty = restricted_sum(table(3), SumSpec{}.add(1, F::first(4, 6)));
    EXPECT_TRUE(empty.is_exact());
    EXPECT_TRUE(empty.contains(Rational(0)));

    const RealBall all = restricted_sum(table(6), SumSpec{}.add(1, F::first(0, 2)).add(1, F::first(1, 2)));
    EXPECT_TRUE(all.intersects(zeta_numeric(6, kCtx)));
}

TEST(RestrictedSum, OverlappingFiltersAccumulateCoefficients) {
    SumSpec spec;
    spec.add(1, F::first(2, 3)).add(-2, F::first(4, 6));
    const auto coeffs = pair_coefficients(spec, 11);
    std::map<int, Rational> by_l1;
    for (const auto& [p, c] : coeffs) by_l1[p.l1] = c;
    EXPECT_EQ(by_l1.at(2), Rational(1));
    EXPECT_EQ(by_l1.at(4), Rational(-2));
    EXPECT_EQ(by_l1.at(5), Rational(1));
    EXPECT_EQ(by_l1.at(8), Rational(1));
    EXPECT_EQ(by_l1.at(10), Rational(-2));
    EXPECT_EQ(by_l1.count(3), 0U);

    // cancelling terms leave no pairs
    EXPECT_TRUE(pair_coefficients(SumSpec{}.add(1, F::first(1, 2)).add(-1, F::first(1, 2)), 9).empty());
}

TEST(RestrictedSum, ResidueClassesPartitionTheTable) {
    for (int l = 3; l <= 30; ++l) {
        std::map<int, int> hits;
        for (int r = 0; r < 6; ++r)
            for (const auto& [p, c] : pair_coefficients(SumSpec{}.add(1, F::first(r, 6)), l)) {
                ++hits[p.l1];
                EXPECT_EQ(c, Rational(1));
            }
        ASSERT_EQ(hits.size(), static_cast<std::size_t>(l - 2)) << l;
        for (const auto& [l1, n] : hits) EXPECT_EQ(n, 1) << l << " " << l1;

        SumSpec all;
        for (int r = 0; r < 6; ++r) all.add(1, F::first(r, 6));
        EXPECT_TRUE(zero_within(restricted_sum(table(l), all) - table(l).zeta_weight())) << l;
    }
}

TEST(ParityFormulas, WeightFourExactAndNumeric) {
    for (const auto& r : gkz_parity_exact_weight4()) {
        EXPECT_TRUE(r.passed) << r.label;
        EXPECT_TRUE(r.exact);
    }
    const auto numeric = gkz_parity_check(table(4));
    for (const auto& r : numeric) EXPECT_TRUE(r.passed) << r.label;
    EXPECT_TRUE(real(numeric[0].lhs).intersects(pi_power(Rational(1, 120), 4)));
    EXPECT_TRUE(real(numeric[1].lhs).intersects(pi_power(Rational(1, 360), 4)));
    EXPECT_THROW(gkz_parity_check(table(5)), std::invalid_argument);
}

TEST(ParityFormulas, EvenWeightsThrough30) {
    for (int l = 4; l <= 30; l += 2)
        for (const auto& r : gkz_parity_check(table(l))) EXPECT_TRUE(r.passed) << l << " " << r.label;
}

TEST(ModThreeIdentity, Examples) {
    const CheckReport r5 = theorem1_check(table(5));
    EXPECT_TRUE(r5.passed);
    // closed forms: zeta(4,1) = 2 zeta(5) - zeta(2) zeta(3), zeta(3,2) = -11/2 zeta(5) + 3 zeta(2) zeta(3)
    const RealBall z23 = zeta_numeric(2, kCtx) * zeta_numeric(3, kCtx);
    const RealBall z5 = zeta_numeric(5, kCtx);
    EXPECT_TRUE(zero_within(table(5).at(4) - (z5 * Rational(2) - z23)));
    EXPECT_TRUE(zero_within(table(5).at(3) - (z5 * Rational(-11, 2) + z23 * Rational(3))));

    const CheckReport r3 = theorem1_check(table(3));
    EXPECT_TRUE(r3.passed);
    EXPECT_TRUE(real(r3.lhs).contains(Rational(0)));
    EXPECT_TRUE(real(r3.rhs).contains(Rational(0)));

    const CheckReport r8 = theorem1_check(table(8));
    EXPECT_TRUE(r8.passed);
    EXPECT_TRUE(real(r8.lhs).intersects(table(8).at(4)));

    // l = 4: zeta(3,1) = 1/3 zeta(2,2), i.e. pi^4/360 = (1/3)(pi^4/120)
    EXPECT_TRUE(theorem1_check(table(4)).passed);
    EXPECT_EQ(Rational(1, 360), Rational(1, 3) * Rational(1, 120));

    EXPECT_THROW(theorem1_spec(2), std::invalid_argument);
}

TEST(ModThreeIdentity, AllWeightsThrough30) {
    for (int l = 3; l <= 30; ++l) {
        const CheckReport r = theorem1_check(table(l));
        EXPECT_TRUE(r.passed) << l << " " << r.label;
        EXPECT_FALSE(r.exact);
        EXPECT_EQ(r.tolerance, kCtx.target_tolerance());
    }
}

TEST(EvenWeightModSixIdentity, Examples) {
    const CheckReport r8 = corollary1_check(table(8));
    EXPECT_TRUE(r8.passed);
    EXPECT_EQ((zeta_even_exact(4) * zeta_even_exact(4) - zeta_even_exact(8)) * Rational(1, 2),
              PiPolynomial::monomial(Rational(1, 113400), 8));
    EXPECT_EQ(Rational(1, 113400), Rational(1, 9450 * 12));

    const CheckReport r6 = corollary1_check(table(6));
    EXPECT_TRUE(r6.passed);
    const RealBall z3 = zeta_numeric(3, kCtx);
    EXPECT_TRUE(zero_within(table(6).at(3) - (z3 * z3 - zeta_numeric(6, kCtx)) * Rational(1, 2)));

    const CheckReport r10 = corollary1_check(table(10));
    EXPECT_TRUE(r10.passed);
    const auto& t = table(10);
    // (9,1) also lies in the class l1 = 3, l2 = 1 (mod 6)
    EXPECT_TRUE(zero_within(real(r10.lhs) - (t.at(3) + t.at(4) - t.at(5) + t.at(9))));
    EXPECT_FALSE((t.at(3) + t.at(4) - t.at(5) - real(r10.rhs)).contains_zero());

    EXPECT_THROW(corollary1_check(table(7)), std::invalid_argument);
}

TEST(EvenWeightModSixIdentity, AllEvenWeightsThrough30) {
    for (int l = 4; l <= 30; l += 2) EXPECT_TRUE(corollary1_check(table(l)).passed) << l;
}

// For l = 2 (mod 6) the even-weight identity follows from the mod-3 identity
// plus the both-odd parity formula.
TEST(EvenWeightModSixIdentity, FollowsFromModThreeAndParity) {
    for (int l = 8; l <= 30; l += 6) {
        const auto& t = table(l);
        const CheckReport thm = theorem1_check(t);
        const CheckReport cor = corollary1_check(t);
        const auto parity = gkz_parity_check(t);
        EXPECT_TRUE(zero_within(real(thm.lhs) - real(cor.lhs))) << l;
        const RealBall rebuilt = t.zeta_weight() * Rational(1, 6) - real(parity[1].rhs) * Rational(1, 3);
        EXPECT_TRUE(zero_within(rebuilt - real(cor.rhs))) << l;
        EXPECT_TRUE(zero_within(real(thm.rhs) - real(cor.rhs))) << l;
    }
}

TEST(SignedFilterIdentity, Examples) {
    EXPECT_EQ(Rational(6, 3).frac(), Rational(0));
    const CheckReport r3 = prop1_check(table(3));
    EXPECT_TRUE(r3.passed);
    const RealBall z3 = zeta_numeric(3, kCtx);
    EXPECT_TRUE(real(r3.lhs).intersects(-z3));
    EXPECT_TRUE(real(r3.rhs).intersects(-z3));
    EXPECT_TRUE(prop1_check(table(4)).passed);
    EXPECT_THROW(prop1_lhs_spec(2), std::invalid_argument);
}

TEST(SignedFilterIdentity, WeightsThrough20) {
    for (int l = 3; l <= 20; ++l) EXPECT_TRUE(prop1_check(table(l)).passed) << l;
}

TEST(SignedFilterIdentity, TermwiseAndPerPairEvaluationAgree) {
    for (int l = 3; l <= 20; ++l) {
        const SumSpec spec = prop1_lhs_spec(l);
        std::map<int, Rational> manual;
        RealBall termwise(kCtx.internal_precision());
        for (const SumTerm& term : spec.terms) {
            for (int l1 = 2; l1 < l; ++l1)
                if (term.filter.matches(IndexPair(l1, l - l1))) manual[l1] += term.coefficient;
            termwise += restricted_sum(table(l), SumSpec{{term}});
        }
        std::erase_if(manual, [](const auto& kv) { return kv.second.is_zero(); });
        std::map<int, Rational> accumulated;
        for (const auto& [p, c] : pair_coefficients(spec, l)) accumulated[p.l1] = c;
        EXPECT_EQ(manual, accumulated) << l;
        EXPECT_TRUE(zero_within(termwise - restricted_sum(table(l), spec))) << l;
    }
}

TEST(CubeRootEquations, Examples) {
    const auto r4 = lemma1_check(4, kCtx);
    for (const auto& r : r4) EXPECT_TRUE(r.passed) << r.label;
    EXPECT_TRUE(std::get<ComplexBall>(r4[2].lhs).contains_zero());
    EXPECT_TRUE(std::get<ComplexBall>(r4[2].rhs).contains(Rational(0), Rational(0)));
    // right side of the first equation: (5/2) zeta(4) - T_4(-1,1) + 3 * (empty signed class)
    const RealBall expected = pi_power(Rational(1, 36), 4) + pi_power(Rational(1, 180), 4);
    EXPECT_TRUE(std::get<ComplexBall>(r4[0].rhs).real().intersects(expected));

    EXPECT_EQ(cube_root_power_sum(6), 6);
    const ComplexBall w = cube_root_of_unity(kCtx);
    const ComplexBall one(RealBall(1, kCtx.internal_precision()));
    ComplexBall total(kCtx.internal_precision());
    for (const ComplexBall& x : {one, w, w * w}) total += homogeneous_divided_difference(x, one, 4);
    EXPECT_TRUE(total.contains(Rational(6), Rational(0)));

    EXPECT_THROW(lemma1_check(2, kCtx), std::invalid_argument);
}

TEST(CubeRootEquations, WeightsThrough20) {
    for (int l = 3; l <= 20; ++l) {
        for (const auto& r : lemma1_check(table(l))) EXPECT_TRUE(r.passed) << l << " " << r.label;
        EXPECT_EQ(cube_root_power_sum(l), Integer(3) * Rational(l + 1, 3).floor()) << l;
    }
}

TEST(CubeRootEquations, ConjugateRootsGiveTheSameEnclosures) {
    const ComplexBall w = cube_root_of_unity(kCtx);
    const ComplexBall one(RealBall(1, kCtx.internal_precision()));
    for (int l = 3; l <= 20; ++l) {
        const auto a = lemma1_check(table(l), {one, w, w * w});
        const auto b = lemma1_check(table(l), {one, w.conj(), (w * w).conj()});
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& la = std::get<ComplexBall>(a[i].lhs);
            const auto& lb = std::get<ComplexBall>(b[i].lhs);
            EXPECT_TRUE(la.intersects(lb)) << l << " " << i;
            EXPECT_TRUE(b[i].passed) << l << " " << i;
        }
    }
}

TEST(BernoulliChain, Examples) {
    const Corollary2Chain c8 = corollary2_chain(8);
    EXPECT_EQ(c8.pair_count, 1);
    EXPECT_EQ(c8.zeta_products, PiPolynomial::monomial(Rational(1, 8100), 8));
    EXPECT_EQ(c8.zeta_target, PiPolynomial::monomial(Rational(7, 6) * Rational(1, 9450), 8));
    EXPECT_TRUE(c8.pi_identity && c8.counts_match && c8.bernoulli_bridge);

    const Corollary2Chain c14 = corollary2_chain(14);
    EXPECT_EQ(c14.pair_count, 2);
    EXPECT_EQ(c14.zeta_products, PiPolynomial::monomial(Rational(2, 8419950), 14));
    EXPECT_EQ(c14.zeta_target, PiPolynomial::monomial(Rational(13, 6) * Rational(2, 18243225), 14));

    const CheckReport r = corollary2_exact_chain(8);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.exact);
    EXPECT_THROW(corollary2_exact_chain(10), std::invalid_argument);
}

TEST(BernoulliChain, HoldsThrough200) {
    for (int l = 8; l <= 200; l += 6) EXPECT_TRUE(corollary2_exact_chain(l).passed) << l;
}
