#include "dzv/double_zeta.hpp"

#include "dzv/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace dzv {

IndexPair::IndexPair(int first, int second) : l1(first), l2(second) {
    if (l1 < 2 || l2 < 1)
        throw std::invalid_argument("IndexPair: need l1 >= 2 and l2 >= 1, got (" + std::to_string(l1) + ", " +
                                    std::to_string(l2) + ")");
}

namespace {

constexpr long kMaxCutoff = 1L << 14;

struct DzvAttempt {
    RealBall value;
    Float dropped;
};

DzvAttempt double_zeta_attempt(const IndexPair& p, long cutoff, int corrections, const PrecisionCtx& ctx) {
    const mpfr_prec_t prec = ctx.internal_precision();
    const int l = p.weight();
    const Rational next(Integer(cutoff + 1));

    // Head: walk zeta(l1, m+1) from m = cutoff down to 1.
    RealBall inner = hurwitz_zeta(p.l1, next, ctx);
    RealBall head(prec);
    for (long m = cutoff; m >= 1; --m) {
        const RealBall mb(m, prec);
        head += pow(mb, -p.l2) * inner;
        inner += pow(mb, -p.l1);
    }

    RealBall tail = hurwitz_zeta(l - 1, next, ctx) * Rational(1, p.l1 - 1);
    tail -= hurwitz_zeta(l, next, ctx).mul_2si(-1);
    Rational last_coefficient;
    for (int k = 1; k <= corrections; ++k) {
        last_coefficient = euler_maclaurin_coefficient(p.l1, k);
        tail += hurwitz_zeta(l + 2 * k - 1, next, ctx) * last_coefficient;
    }
    RealBall dropped = hurwitz_zeta(l + 2 * corrections - 1, next, ctx) * abs(last_coefficient);
    return {head + tail, dropped.abs_upper()};
}

}  // namespace

RealBall double_zeta(const IndexPair& p, const PrecisionCtx& ctx) {
    const long target_bits = static_cast<long>(ctx.working_precision()) + 8;
    long cutoff = std::max<long>(32, ctx.working_precision() / 2);
    int corrections = std::max<int>(4, static_cast<int>(ctx.working_precision() / 8));
    for (;;) {
        DzvAttempt r = double_zeta_attempt(p, cutoff, corrections, ctx);
        Float target = r.value.abs_lower();
        mpfr_mul_2si(target.get(), target.get(), -target_bits, MPFR_RNDD);
        if (mpfr_cmp(r.dropped.get(), target.get()) <= 0) {
            r.value.add_error(r.dropped);
            return r.value;
        }
        if (cutoff >= kMaxCutoff) throw PrecisionUnreachable("double_zeta: outer cutoff cap reached");
        cutoff *= 2;
        corrections += corrections / 2;
    }
}

DzvTable::DzvTable(int weight, PrecisionCtx ctx, std::vector<RealBall> entries, RealBall zeta_weight)
    : weight_(weight), ctx_(std::move(ctx)), entries_(std::move(entries)), zeta_weight_(std::move(zeta_weight)) {
    if (weight_ < 3) throw std::invalid_argument("DzvTable: weight must be >= 3");
    if (entries_.size() != static_cast<std::size_t>(weight_ - 2))
        throw std::invalid_argument("DzvTable: expected weight-2 entries");
}

std::vector<IndexPair> DzvTable::pairs() const {
    std::vector<IndexPair> out;
    out.reserve(entries_.size());
    for (int l1 = 2; l1 < weight_; ++l1) out.emplace_back(l1, weight_ - l1);
    return out;
}

const RealBall& DzvTable::at(const IndexPair& p) const {
    if (p.weight() != weight_) throw std::out_of_range("DzvTable::at: pair has the wrong weight");
    return entries_[static_cast<std::size_t>(p.l1 - 2)];
}

const RealBall& DzvTable::at(int l1) const { return at(IndexPair(l1, weight_ - l1)); }

DzvTable build_table(int weight, const PrecisionCtx& ctx, unsigned jobs) {
    if (weight < 3) throw std::invalid_argument("build_table: weight must be >= 3");
    const std::size_t count = static_cast<std::size_t>(weight - 2);
    std::vector<RealBall> entries(count, RealBall(ctx.internal_precision()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                const int l1 = static_cast<int>(i) + 2;
                entries[i] = double_zeta(IndexPair(l1, weight - l1), ctx);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // Every entry must meet the 2^-P relative target.
    for (std::size_t i = 0; i < count; ++i) {
        Float limit = entries[i].abs_lower();
        mpfr_mul_2si(limit.get(), limit.get(), -static_cast<long>(ctx.working_precision()), MPFR_RNDD);
        if (mpfr_cmp(entries[i].rad().get(), limit.get()) > 0)
            throw PrecisionUnreachable("build_table: entry radius exceeds the working-precision target");
    }
    return DzvTable(weight, ctx, std::move(entries), zeta_numeric(weight, ctx));
}

GenPolyValue gen_poly_eval(const DzvTable& t, const ComplexBall& x, const ComplexBall& y) {
    ComplexBall sum(t.ctx().internal_precision());
    for (const IndexPair& p : t.pairs()) {
        ComplexBall term = pow(x, static_cast<unsigned long>(p.l1 - 1)) * pow(y, static_cast<unsigned long>(p.l2 - 1));
        sum += term * t.at(p);
    }
    return {t.weight(), x, y, std::move(sum)};
}

ComplexBall homogeneous_divided_difference(const ComplexBall& x, const ComplexBall& y, unsigned n) {
    ComplexBall sum(x.precision());
    for (unsigned i = 0; i <= n; ++i) sum += pow(x, i) * pow(y, n - i);
    return sum;
}

RealBall harmonic_check(int a, int b, const PrecisionCtx& ctx) {
    if (a < 2 || b < 2) throw std::invalid_argument("harmonic_check: need a, b >= 2");
    RealBall r = zeta_numeric(a, ctx) * zeta_numeric(b, ctx);
    r -= double_zeta(IndexPair(a, b), ctx);
    r -= double_zeta(IndexPair(b, a), ctx);
    r -= zeta_numeric(a + b, ctx);
    return r;
}

RealBall sum_formula_check(const DzvTable& t) {
    RealBall sum(t.ctx().internal_precision());
    for (const IndexPair& p : t.pairs()) sum += t.at(p);
    return sum - t.zeta_weight();
}

RealBall weighted_sum_check(const DzvTable& t) {
    RealBall sum(t.ctx().internal_precision());
    for (const IndexPair& p : t.pairs()) {
        RealBall term = t.at(p);
        sum += term.mul_2si(p.l1 - 1);
    }
    return sum - t.zeta_weight() * Rational(t.weight() + 1, 2);
}

ComplexBall functional_eq26_check(const DzvTable& t, const ComplexBall& x, const ComplexBall& y) {
    const ComplexBall s = x + y;
    ComplexBall r = gen_poly_eval(t, s, y).value;
    r += gen_poly_eval(t, y + x, x).value;
    r -= gen_poly_eval(t, x, y).value;
    r -= gen_poly_eval(t, y, x).value;
    r -= homogeneous_divided_difference(x, y, static_cast<unsigned>(t.weight() - 2)) * t.zeta_weight();
    return r;
}

ComplexBall functional_eq26_check(int l, const ComplexBall& x, const ComplexBall& y, const PrecisionCtx& ctx) {
    return functional_eq26_check(build_table(l, ctx), x, y);
}

}  // namespace dzv
