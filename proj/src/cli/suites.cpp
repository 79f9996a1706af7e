#include "dzv/cli/suites.hpp"

#include "dzv/bernoulli.hpp"
#include "dzv/identities.hpp"
#include "dzv/zeta.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

namespace dzv::cli {

const DzvTable& TableCache::get(int weight) {
    std::shared_ptr<Slot> slot;
    {
        std::lock_guard lock(mutex_);
        auto& s = slots_[weight];
        if (!s) s = std::make_shared<Slot>();
        slot = s;
    }
    std::call_once(slot->once, [&] {
        try {
            slot->table = std::make_unique<DzvTable>(build_table(weight, ctx_));
        } catch (...) {
            slot->failure = std::current_exception();
        }
    });
    if (slot->failure) std::rethrow_exception(slot->failure);
    return *slot->table;
}

PrecisionCtx make_ctx(const RunConfig& config) {
    return PrecisionCtx::with_decimal_tolerance(config.precision_bits, config.tolerance_exponent);
}

std::vector<std::pair<Rational, Rational>> eq26_sample_points(int weight, std::size_t count) {
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(weight));
    std::uniform_int_distribution<long> den_dist(1, 7);
    auto draw = [&] {
        const long q = den_dist(rng);
        std::uniform_int_distribution<long> num_dist(-2 * q, 2 * q);
        return Rational(num_dist(rng), q);
    };
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rational x = draw();
        Rational y = draw();
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

namespace {

using Records = std::vector<CheckRecord>;

struct Hypothesis {
    std::function<bool(int)> holds;
    const char* description;
};

Hypothesis hypothesis_of(const std::string& suite) {
    auto at_least = [](int m) { return [m](int l) { return l >= m; }; };
    auto even_at_least = [](int m) { return [m](int l) { return l >= m && l % 2 == 0; }; };
    if (suite == "harmonic") return {at_least(4), "needs l >= 4"};
    if (suite == "gkz-parity" || suite == "corollary1" || suite == "euler-bernoulli")
        return {even_at_least(4), "needs even l >= 4"};
    if (suite == "ramanujan" || suite == "corollary2-chain")
        return {[](int l) { return l >= 8 && l % 6 == 2; }, "needs l = 2 (mod 6) and l >= 8"};
    return {at_least(3), "needs l >= 3"};
}

Records from_reports(const auto& reports, const std::string& tol) {
    Records out;
    for (const CheckReport& r : reports) out.push_back(to_record(r, tol));
    return out;
}

CheckReport exact_verdict(const IdentityVerdict& v) { return exact_report(v.label, v.weight, v.lhs, v.rhs); }

Records run_checks(const std::string& suite, int l, TableCache& tables, const std::string& tol) {
    const Rational& tolerance = tables.ctx().target_tolerance();
    if (suite == "euler-bernoulli") return {to_record(exact_verdict(euler_identity_check(l)), tol)};
    if (suite == "ramanujan") {
        Records out;
        for (const auto& v : ramanujan_check(l)) out.push_back(to_record(exact_verdict(v), tol));
        return out;
    }
    if (suite == "corollary2-chain") return {to_record(corollary2_exact_chain(l), tol)};

    const DzvTable& t = tables.get(l);
    const mpfr_prec_t prec = t.ctx().internal_precision();
    if (suite == "sum-formula") {
        RealBall total = sum_formula_check(t) + t.zeta_weight();
        return {to_record(numeric_report("sum formula", l, total, t.zeta_weight(), tolerance), tol)};
    }
    if (suite == "weighted-sum") {
        RealBall rhs = t.zeta_weight() * Rational(l + 1, 2);
        RealBall lhs = weighted_sum_check(t) + rhs;
        return {to_record(numeric_report("weighted sum formula", l, lhs, rhs, tolerance), tol)};
    }
    if (suite == "harmonic") {
        Records out;
        for (int a = 2; 2 * a <= l; ++a) {
            const int b = l - a;
            RealBall lhs = zeta_numeric(a, t.ctx()) * zeta_numeric(b, t.ctx());
            RealBall rhs = t.at(a) + t.at(b) + t.zeta_weight();
            out.push_back(to_record(numeric_report("harmonic a=" + std::to_string(a) + " b=" + std::to_string(b), l,
                                                   lhs, rhs, tolerance),
                                    tol));
        }
        return out;
    }
    if (suite == "gkz-parity") {
        Records out = from_reports(gkz_parity_check(t), tol);
        if (l == 4)
            for (const auto& r : gkz_parity_exact_weight4()) out.push_back(to_record(r, tol));
        return out;
    }
    if (suite == "theorem1") return {to_record(theorem1_check(t), tol)};
    if (suite == "corollary1") return {to_record(corollary1_check(t), tol)};
    if (suite == "prop1") return {to_record(prop1_check(t), tol)};
    if (suite == "lemma1") return from_reports(lemma1_check(t), tol);
    if (suite == "eq26") {
        Records out;
        auto point = [prec](const Rational& q) { return ComplexBall(RealBall(q, prec)); };
        const ComplexBall zero(prec);
        for (const auto& [x, y] : eq26_sample_points(l, 20)) {
            ComplexBall r = functional_eq26_check(t, point(x), point(y));
            out.push_back(to_record(numeric_report("eq26 x=" + x.to_string() + " y=" + y.to_string(), l, r, zero,
                                                   tolerance),
                                    tol));
        }
        for (const auto& [x, y] : std::vector<std::pair<long, long>>{{1, 1}, {1, 0}, {1, -1}}) {
            ComplexBall r = functional_eq26_check(t, point(x), point(y));
            out.push_back(to_record(numeric_report("eq26 x=" + std::to_string(x) + " y=" + std::to_string(y), l, r,
                                                   zero, tolerance),
                                    tol));
        }
        // At (1,1) the equation reduces to T_l(2,1) = (l+1)/2 zeta(l).
        ComplexBall t21 = gen_poly_eval(t, point(2), point(1)).value;
        ComplexBall target(t.zeta_weight() * Rational(l + 1, 2));
        out.push_back(to_record(numeric_report("eq26 (1,1): T(2,1) = (l+1)/2 zeta(l)", l, t21, target, tolerance),
                                tol));
        return out;
    }
    throw UsageError("unknown suite '" + suite + "'");
}

}  // namespace

std::vector<CheckRecord> run_suite_at_weight(const std::string& suite, int weight, TableCache& tables,
                                             const std::string& tolerance_text) {
    const Hypothesis h = hypothesis_of(suite);
    if (!h.holds(weight)) return {skipped_record(suite, weight, h.description)};
    try {
        return run_checks(suite, weight, tables, tolerance_text);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        return {error_record(suite, weight, e.what())};
    }
}

SuiteReport run_suite(const std::string& suite, const RunConfig& config, TableCache& tables) {
    const auto start = std::chrono::steady_clock::now();
    const std::string tol = "1e-" + std::to_string(config.tolerance_exponent);
    const int count = config.weight_max - config.weight_min + 1;
    std::vector<Records> per_weight(static_cast<std::size_t>(count));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++)
            per_weight[static_cast<std::size_t>(i)] = run_suite_at_weight(suite, config.weight_min + i, tables, tol);
    };
    const unsigned threads = std::min<unsigned>(config.parallelism, static_cast<unsigned>(count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SuiteReport report;
    report.suite = suite;
    report.config_echo = config;
    for (auto& records : per_weight)
        for (auto& r : records) report.checks.push_back(std::move(r));
    report.recount();
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<SuiteReport> run_all(const RunConfig& config) {
    config.validate();
    TableCache tables(make_ctx(config));
    std::vector<SuiteReport> out;
    for (const auto& suite : config.suites) out.push_back(run_suite(suite, config, tables));
    return out;
}

}  // namespace dzv::cli
