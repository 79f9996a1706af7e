#pragma once

#include "dzv/bernoulli.hpp"
#include "dzv/complex_ball.hpp"
#include "dzv/double_zeta.hpp"
#include "dzv/pi_polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dzv {

struct Residue {
    int residue;
    int modulus;  // 2, 3 or 6

    // Reduces any integer residue into [0, modulus).
    Residue(int r, int m);
    bool matches(int value) const { return ((value % modulus) + modulus) % modulus == residue; }
    friend bool operator==(const Residue&, const Residue&) = default;
};

// Residue l1 = r (mod 6) of the unique class with l1 = r3 (mod 3) and l1 = r2 (mod 2).
Residue combine_mod6(int r3, int r2);

class CongruenceFilter {
public:
    enum class Target { First, Second, Both };

    static CongruenceFilter first(int residue, int modulus);
    static CongruenceFilter second(int residue, int modulus);
    static CongruenceFilter both(int residue1, int modulus1, int residue2, int modulus2);

    Target target() const { return target_; }
    bool matches(const IndexPair& p) const;
    std::string to_string() const;

private:
    CongruenceFilter(Target target, std::optional<Residue> first, std::optional<Residue> second)
        : target_(target), first_(first), second_(second) {}
    Target target_;
    std::optional<Residue> first_;
    std::optional<Residue> second_;
};

struct SumTerm {
    Rational coefficient;
    CongruenceFilter filter;
};

// Formal signed combination  sum_terms c * (sum over pairs matching the filter).
struct SumSpec {
    std::vector<SumTerm> terms;

    SumSpec& add(const Rational& coefficient, const CongruenceFilter& filter) {
        terms.push_back({coefficient, filter});
        return *this;
    }
};

// Net coefficient of each pair of the given weight; overlapping filters add up.
// Pairs with net coefficient zero are omitted.
std::vector<std::pair<IndexPair, Rational>> pair_coefficients(const SumSpec& spec, int weight);

RealBall restricted_sum(const DzvTable& t, const SumSpec& spec);

using Quantity = std::variant<RealBall, ComplexBall, Rational, PiPolynomial>;

std::string quantity_to_string(const Quantity& q, int digits = 30);

struct CheckReport {
    std::string label;
    int weight = 0;
    Quantity lhs;
    Quantity rhs;
    Quantity residual;
    bool passed = false;
    bool exact = false;
    Rational tolerance;
};

// Numeric pass rule: |mid| + rad of the residual within tolerance, and the
// two sides' enclosures intersect.
CheckReport numeric_report(std::string label, int weight, const RealBall& lhs, const RealBall& rhs,
                           const Rational& tolerance);
CheckReport numeric_report(std::string label, int weight, const ComplexBall& lhs, const ComplexBall& rhs,
                           const Rational& tolerance);
CheckReport exact_report(std::string label, int weight, const Rational& lhs, const Rational& rhs);
CheckReport exact_report(std::string label, int weight, const PiPolynomial& lhs, const PiPolynomial& rhs);

// Both-even sum = 3/4 zeta(l), both-odd sum = 1/4 zeta(l); even l >= 4.
std::array<CheckReport, 2> gkz_parity_check(const DzvTable& t);
// Weight 4 in pi-power arithmetic, with zeta(2,2) from the harmonic relation
// and zeta(3,1) from the sum formula.
std::array<CheckReport, 2> gkz_parity_exact_weight4();

// One side of a restricted sum identity: spec + coefficient * zeta(l).
struct IdentitySide {
    SumSpec sums;
    Rational zeta_coefficient;
};

struct IdentitySpec {
    std::string label;
    IdentitySide lhs;
    IdentitySide rhs;
};

// Dispatch on l mod 3, l >= 3.
IdentitySpec theorem1_spec(int l);
// Dispatch on l mod 6, l even >= 4.
IdentitySpec corollary1_spec(int l);
// Left side of the signed filter identity involving T_l(-1, 1).
SumSpec prop1_lhs_spec(int l);

CheckReport evaluate_identity(const DzvTable& t, const IdentitySpec& spec);
CheckReport theorem1_check(const DzvTable& t);
CheckReport corollary1_check(const DzvTable& t);
CheckReport prop1_check(const DzvTable& t);

// The five cube-root-of-unity equations. `roots` lists x in {1, w, w^2}.
std::array<CheckReport, 5> lemma1_check(const DzvTable& t);
std::array<CheckReport, 5> lemma1_check(const DzvTable& t, const std::array<ComplexBall, 3>& roots);
std::array<CheckReport, 5> lemma1_check(int l, const PrecisionCtx& ctx);

// Exact count sum_{x} sum_{i=0}^{l-2} x^i over cube roots of unity.
Integer cube_root_power_sum(int l);

struct Corollary2Chain {
    int weight = 0;
    long pair_count = 0;       // #{(l1,l2): l1 = l2 = 4 (mod 6)}
    Rational expected_count;   // (l-2)/6
    PiPolynomial zeta_products; // sum_{j = 4 (6)} zeta(j) zeta(l-j)
    PiPolynomial zeta_target;   // (l-1)/6 zeta(l)
    Rational bernoulli_lhs;     // products side rescaled by 4 l! / (2 pi i)^l
    Rational bernoulli_rhs;
    IdentityVerdict ramanujan;  // m = 4 verdict from the Bernoulli module
    bool counts_match = false;
    bool pi_identity = false;
    bool bernoulli_bridge = false;
};

// l = 2 (mod 6), l >= 8.
Corollary2Chain corollary2_chain(int l);
CheckReport corollary2_exact_chain(int l);

}  // namespace dzv
