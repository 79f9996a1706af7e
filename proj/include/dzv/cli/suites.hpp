#pragma once

#include "dzv/cli/report.hpp"
#include "dzv/double_zeta.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace dzv::cli {

// Tables shared across suites of one run; each weight is built at most once.
class TableCache {
public:
    explicit TableCache(PrecisionCtx ctx) : ctx_(std::move(ctx)) {}
    const DzvTable& get(int weight);
    const PrecisionCtx& ctx() const { return ctx_; }

private:
    struct Slot {
        std::once_flag once;
        std::unique_ptr<DzvTable> table;
        std::exception_ptr failure;
    };
    PrecisionCtx ctx_;
    std::mutex mutex_;
    std::map<int, std::shared_ptr<Slot>> slots_;
};

// Deterministic rational sample points with |x|, |y| <= 2 for the
// functional-equation suite.
std::vector<std::pair<Rational, Rational>> eq26_sample_points(int weight, std::size_t count);

// Checks of one suite at one weight; out-of-hypothesis weights give a
// single skipped record.
std::vector<CheckRecord> run_suite_at_weight(const std::string& suite, int weight, TableCache& tables,
                                             const std::string& tolerance_text);

SuiteReport run_suite(const std::string& suite, const RunConfig& config, TableCache& tables);
std::vector<SuiteReport> run_all(const RunConfig& config);

PrecisionCtx make_ctx(const RunConfig& config);

}  // namespace dzv::cli
