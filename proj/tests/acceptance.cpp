// Runs every acceptance criterion at its stated precision, tolerance and time
// budget and prints one PASS/FAIL line per criterion.

#include "dzv/bernoulli.hpp"
#include "dzv/cli/report.hpp"
#include "dzv/cli/suites.hpp"
#include "dzv/constants.hpp"
#include "dzv/identities.hpp"
#include "dzv/zeta.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sys/wait.h>

using namespace dzv;

namespace {

const PrecisionCtx kCtx = PrecisionCtx::with_decimal_tolerance(192, 40);

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

bool residual_within(const RealBall& r) {
    return r.contains_zero() && ball_is_zero_within(r, kCtx.target_tolerance()).holds;
}

bool residual_within(const ComplexBall& r) { return residual_within(r.real()) && residual_within(r.imag()); }

std::string w(int l) { return " at l=" + std::to_string(l); }

Outcome euler_identity() {
    Outcome o;
    for (int l = 4; l <= 400; l += 2) o.require(euler_identity_check(l).holds, "identity fails" + w(l));
    return o;
}

Outcome gap_six_identities() {
    Outcome o;
    for (int l = 8; l <= 398; l += 6)
        for (const auto& v : ramanujan_check(l)) o.require(v.holds, v.label + w(l));
    return o;
}

Outcome bernoulli_chain() {
    Outcome o;
    for (int l = 8; l <= 200; l += 6) {
        const Corollary2Chain c = corollary2_chain(l);
        o.require(c.counts_match && Rational(c.pair_count) == Rational(l - 2, 6), "pair count" + w(l));
        o.require(c.pi_identity, "pi-power identity" + w(l));
        o.require(c.bernoulli_bridge && c.ramanujan.holds, "Bernoulli bridge" + w(l));
        o.require(corollary2_exact_chain(l).passed, "chain report" + w(l));
    }
    return o;
}

Outcome spot_value() {
    Outcome o;
    const DzvTable t = build_table(8, kCtx);
    const RealBall target = pipoly_eval(PiPolynomial::monomial(Rational(1, 113400), 8), kCtx);
    o.require(t.at(IndexPair(4, 4)).intersects(target), "zeta(4,4) misses pi^8/113400");
    const CheckReport r = corollary1_check(t);
    o.require(r.passed, "check failed");
    const RealBall& residual = std::get<RealBall>(r.residual);
    Float limit(64);
    mpfr_set_q(limit.get(), kCtx.target_tolerance().gmp().get_mpq_t(), MPFR_RNDD);
    o.require(mpfr_cmp(residual.rad().get(), limit.get()) <= 0, "residual radius above 1e-40");
    return o;
}

Outcome table_sweep(int from, int to, int step, const std::function<void(const DzvTable&, Outcome&)>& check) {
    Outcome o;
    for (int l = from; l <= to; l += step) check(build_table(l, kCtx), o);
    return o;
}

Outcome mod_three_sweep() {
    return table_sweep(3, 30, 1, [](const DzvTable& t, Outcome& o) {
        const CheckReport r = theorem1_check(t);
        o.require(r.passed, r.label + w(t.weight()));
    });
}

Outcome even_weight_sweep() {
    return table_sweep(4, 30, 2, [](const DzvTable& t, Outcome& o) {
        const CheckReport r = corollary1_check(t);
        o.require(r.passed, r.label + w(t.weight()));
    });
}

Outcome parity() {
    Outcome o = table_sweep(4, 30, 2, [](const DzvTable& t, Outcome& o) {
        for (const auto& r : gkz_parity_check(t)) o.require(r.passed, r.label + w(t.weight()));
    });
    const auto exact = gkz_parity_exact_weight4();
    for (const auto& r : exact) o.require(r.passed && r.exact, r.label);
    const PiPolynomial expected = PiPolynomial::monomial(Rational(1, 120), 4);
    o.require(std::get<PiPolynomial>(exact[0].lhs) == expected && std::get<PiPolynomial>(exact[0].rhs) == expected,
              "weight 4 both-even sides differ from pi^4/120");
    return o;
}

Outcome signed_filters_and_cube_roots() {
    return table_sweep(3, 20, 1, [](const DzvTable& t, Outcome& o) {
        const int l = t.weight();
        o.require(prop1_check(t).passed, "signed filter identity" + w(l));
        for (const auto& r : lemma1_check(t)) {
            o.require(r.passed, r.label + w(l));
            o.require(std::get<ComplexBall>(r.residual).contains_zero(), r.label + " residual excludes 0" + w(l));
        }
        o.require(cube_root_power_sum(l) == Integer(3) * Rational(l + 1, 3).floor(), "exact count" + w(l));
    });
}

Outcome functional_equation() {
    Outcome o;
    const mpfr_prec_t p = kCtx.internal_precision();
    for (int l = 3; l <= 16; ++l) {
        const DzvTable t = build_table(l, kCtx);
        for (const auto& [x, y] : cli::eq26_sample_points(l, 20)) {
            const ComplexBall bx(RealBall(x, p)), by(RealBall(y, p));
            o.require(residual_within(functional_eq26_check(t, bx, by)),
                      "residual at (" + x.to_string() + "," + y.to_string() + ")" + w(l));
        }
        const ComplexBall one(RealBall(1, p)), two(RealBall(2, p));
        o.require(residual_within(functional_eq26_check(t, one, one)), "residual at (1,1)" + w(l));
        const RealBall t21 = gen_poly_eval(t, two, one).value.real();
        o.require(residual_within(t21 - t.zeta_weight() * Rational(l + 1, 2)), "T(2,1) != (l+1)/2 zeta(l)" + w(l));
        o.require(residual_within(weighted_sum_check(t)), "weighted sum" + w(l));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const PrecisionCtx ctx64(64);
    for (int l = 3; l <= 8; ++l)
        for (int l1 = 2; l1 < l; ++l1) {
            const RealBall brute = oracle::double_zeta_brute(l1, l - l1, 4000, 64).ball();
            o.require(double_zeta(IndexPair(l1, l - l1), ctx64).intersects(brute),
                      "(" + std::to_string(l1) + "," + std::to_string(l - l1) + ") disjoint from brute force");
        }
    return o;
}

int exit_code_of(const std::string& args) {
    const std::string cmd = std::string(DZV_BINARY) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome properties() {
    Outcome o;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97), rad(0, 50), step(-1000, 1000);
    for (mpfr_prec_t prec : {64, 256})
        for (int i = 0; i < 500; ++i) {
            const Rational cx(num(rng), den(rng)), cy(num(rng), den(rng)), rx(rad(rng), 1000), ry(rad(rng), 1000);
            RealBall X(cx, prec), Y(cy, prec);
            X.add_error(RealBall(rx, 64).upper());
            Y.add_error(RealBall(ry, 64).upper());
            const Rational x = cx + Rational(step(rng), 1000) * rx, y = cy + Rational(step(rng), 1000) * ry;
            bool ok = (X + Y).contains(x + y) && (X - Y).contains(x - y) && (X * Y).contains(x * y) &&
                      pow(X, 3).contains(x * x * x);
            if (!Y.contains_zero()) ok = ok && (X / Y).contains(x / y);
            o.require(ok, "ball inclusion");
        }

    for (int s = 2; s <= 12; ++s)
        for (long a : {1L, 4L, 33L}) {
            const RealBall lhs = hurwitz_zeta(s, Rational(a), kCtx);
            const RealBall rhs = hurwitz_zeta(s, Rational(a + 1), kCtx) + pow(RealBall(a, kCtx.internal_precision()), -s);
            o.require(residual_within(lhs - rhs), "Hurwitz recurrence s=" + std::to_string(s));
        }

    for (int l = 3; l <= 30; ++l) {
        std::vector<int> hits(static_cast<std::size_t>(l), 0);
        for (int r = 0; r < 6; ++r)
            for (const auto& [p, c] : pair_coefficients(SumSpec{}.add(1, CongruenceFilter::first(r, 6)), l))
                ++hits[static_cast<std::size_t>(p.l1)];
        for (int l1 = 2; l1 < l; ++l1) o.require(hits[static_cast<std::size_t>(l1)] == 1, "partition" + w(l));
    }

    for (unsigned l = 4; l <= 60; ++l)
        for (unsigned m : {2U, 3U, 6U})
            for (unsigned r = 0; r < m; ++r)
                o.require(bernoulli_convolution(l, r, m) == bernoulli_convolution(l, (l % m + m - r) % m, m),
                          "reflection symmetry" + w(static_cast<int>(l)));

    cli::RunConfig cfg;
    cfg.suites = {"theorem1", "ramanujan", "harmonic"};
    cfg.weight_min = 3;
    cfg.weight_max = 10;
    const auto reports = cli::run_all(cfg);
    const auto back = cli::parse_json_reports(cli::render_json(reports));
    o.require(back.size() == reports.size(), "report round trip size");
    for (std::size_t i = 0; i < std::min(back.size(), reports.size()); ++i)
        o.require(back[i].same_content(reports[i]) && back[i].config_echo == cfg, "report round trip");

    o.require(exit_code_of("verify --suites theorem1 --weights 3..8") == 0, "exit code 0");
    o.require(exit_code_of("verify --suites sum-formula --weights 5..5 --precision 64 --tol 1e-200") == 1,
              "exit code 1");
    o.require(exit_code_of("verify --suites nosuch") == 2, "exit code 2");
    return o;
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Euler Bernoulli identity, even 4 <= l <= 400, exact", 10, euler_identity},
        {2, "gap-6 Bernoulli identities, m in {0,2,4}, l = 2 (6), 8 <= l <= 398, exact", 10, gap_six_identities},
        {3, "zeta-product chain to the gap-6 identity, 8 <= l <= 200, exact", 30, bernoulli_chain},
        {4, "zeta(4,4) spot value and l=8 even-weight identity, radius <= 1e-40", 5, spot_value},
        {5, "mod-3 restricted sums, 3 <= l <= 30, 192 bits, tol 1e-40", 600, mod_three_sweep},
        {6, "mod-6 even-weight restricted sums, even 4 <= l <= 30", 600, even_weight_sweep},
        {7, "parity sums 3/4 and 1/4 zeta(l), even 4 <= l <= 30, exact at l=4", 600, parity},
        {8, "signed filter identity and cube-root equations, 3 <= l <= 20", 600, signed_filters_and_cube_roots},
        {9, "generating polynomial functional equation, 20 points, 3 <= l <= 16", 600, functional_equation},
        {10, "double zeta vs truncated double sum, weight <= 8, 64 bits", 60, oracle_equivalence},
        {11, "property suites", 600, properties},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.budget_seconds) {
            o.ok = false;
            o.detail = "over time budget";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.name << "  (" << timing << ")";
        if (!o.ok) std::cout << "  " << o.detail;
        std::cout << std::endl;
        if (!o.ok) ++failures;
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}
