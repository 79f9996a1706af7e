#pragma once

#include "dzv/cli/run_config.hpp"
#include "dzv/identities.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dzv::cli {

// Serialized form of one check. Every number is a decimal string.
struct CheckRecord {
    std::string label;
    int weight = 0;
    std::string lhs;
    std::string rhs;
    std::string residual_midpoint;
    std::string residual_radius;
    bool exact = false;
    bool passed = false;
    std::optional<std::string> tolerance;  // numeric checks only
    std::optional<std::string> skipped_reason;
    std::optional<std::string> error;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

CheckRecord to_record(const CheckReport& r, const std::string& tolerance_text);
CheckRecord skipped_record(std::string label, int weight, std::string reason);
CheckRecord error_record(std::string label, int weight, std::string message);

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    std::size_t passed_count = 0;  // includes skipped checks
    std::size_t failed_count = 0;
    std::size_t skipped_count = 0;
    double wall_time_ms = 0;
    RunConfig config_echo;

    void recount();
    // Equality of everything except wall time.
    bool same_content(const SuiteReport& o) const;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);
void to_json(nlohmann::json& j, const CheckRecord& r);
void from_json(const nlohmann::json& j, CheckRecord& r);
void to_json(nlohmann::json& j, const SuiteReport& r);
void from_json(const nlohmann::json& j, SuiteReport& r);

// One suite: a single object; several suites: an array of objects.
std::string render_json(const std::vector<SuiteReport>& reports);
std::vector<SuiteReport> parse_json_reports(const std::string& text);
std::string render_csv(const std::vector<SuiteReport>& reports);
std::string render_text(const std::vector<SuiteReport>& reports);

}  // namespace dzv::cli
