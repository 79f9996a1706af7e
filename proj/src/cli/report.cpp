#include "dzv/cli/report.hpp"

#include <sstream>

namespace dzv::cli {

namespace {

std::string midpoint_text(const RealBall& b) { return b.mid().to_string(20); }
std::string radius_text(const RealBall& b) { return b.rad().to_string(3, MPFR_RNDU); }

std::string complex_midpoint_text(const ComplexBall& z) {
    std::string im = midpoint_text(z.imag());
    if (im.front() != '-') im = "+" + im;
    return midpoint_text(z.real()) + im + "i";
}

std::string complex_radius_text(const ComplexBall& z) {
    Float r(RealBall::kRadiusBits);
    mpfr_add(r.get(), z.real().rad().get(), z.imag().rad().get(), MPFR_RNDU);
    return r.to_string(3, MPFR_RNDU);
}

}  // namespace

CheckRecord to_record(const CheckReport& r, const std::string& tolerance_text) {
    CheckRecord rec;
    rec.label = r.label;
    rec.weight = r.weight;
    rec.lhs = quantity_to_string(r.lhs);
    rec.rhs = quantity_to_string(r.rhs);
    rec.exact = r.exact;
    rec.passed = r.passed;
    if (const auto* b = std::get_if<RealBall>(&r.residual)) {
        rec.residual_midpoint = midpoint_text(*b);
        rec.residual_radius = radius_text(*b);
    } else if (const auto* z = std::get_if<ComplexBall>(&r.residual)) {
        rec.residual_midpoint = complex_midpoint_text(*z);
        rec.residual_radius = complex_radius_text(*z);
    } else {
        rec.residual_midpoint = quantity_to_string(r.residual);
        rec.residual_radius = "0";
    }
    if (!r.exact) rec.tolerance = tolerance_text;
    return rec;
}

CheckRecord skipped_record(std::string label, int weight, std::string reason) {
    CheckRecord rec;
    rec.label = std::move(label);
    rec.weight = weight;
    rec.passed = true;
    rec.skipped_reason = std::move(reason);
    return rec;
}

CheckRecord error_record(std::string label, int weight, std::string message) {
    CheckRecord rec;
    rec.label = std::move(label);
    rec.weight = weight;
    rec.passed = false;
    rec.error = std::move(message);
    return rec;
}

void SuiteReport::recount() {
    passed_count = failed_count = skipped_count = 0;
    for (const auto& c : checks) {
        if (c.passed) ++passed_count;
        else ++failed_count;
        if (c.skipped_reason) ++skipped_count;
    }
}

bool SuiteReport::same_content(const SuiteReport& o) const {
    return suite == o.suite && checks == o.checks && passed_count == o.passed_count &&
           failed_count == o.failed_count && skipped_count == o.skipped_count && config_echo == o.config_echo;
}

void to_json(nlohmann::json& j, const RunConfig& c) {
    j = nlohmann::json{{"precision_bits", c.precision_bits},
                       {"tolerance_exponent", c.tolerance_exponent},
                       {"weight_min", c.weight_min},
                       {"weight_max", c.weight_max},
                       {"suites", c.suites},
                       {"output_format", to_string(c.output_format)},
                       {"parallelism", c.parallelism}};
    j["output_path"] = c.output_path ? nlohmann::json(*c.output_path) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, RunConfig& c) {
    j.at("precision_bits").get_to(c.precision_bits);
    j.at("tolerance_exponent").get_to(c.tolerance_exponent);
    j.at("weight_min").get_to(c.weight_min);
    j.at("weight_max").get_to(c.weight_max);
    j.at("suites").get_to(c.suites);
    c.output_format = parse_format(j.at("output_format").get<std::string>());
    j.at("parallelism").get_to(c.parallelism);
    const auto& p = j.at("output_path");
    c.output_path = p.is_null() ? std::nullopt : std::optional<std::string>(p.get<std::string>());
}

void to_json(nlohmann::json& j, const CheckRecord& r) {
    j = nlohmann::json{{"label", r.label},
                       {"weight", r.weight},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"residual_midpoint", r.residual_midpoint},
                       {"residual_radius", r.residual_radius},
                       {"exact", r.exact},
                       {"passed", r.passed}};
    if (r.tolerance) j["tolerance"] = *r.tolerance;
    if (r.skipped_reason) j["skipped_reason"] = *r.skipped_reason;
    if (r.error) j["error"] = *r.error;
}

void from_json(const nlohmann::json& j, CheckRecord& r) {
    j.at("label").get_to(r.label);
    j.at("weight").get_to(r.weight);
    j.at("lhs").get_to(r.lhs);
    j.at("rhs").get_to(r.rhs);
    j.at("residual_midpoint").get_to(r.residual_midpoint);
    j.at("residual_radius").get_to(r.residual_radius);
    j.at("exact").get_to(r.exact);
    j.at("passed").get_to(r.passed);
    auto optional_string = [&j](const char* key) {
        return j.contains(key) ? std::optional<std::string>(j.at(key).get<std::string>()) : std::nullopt;
    };
    r.tolerance = optional_string("tolerance");
    r.skipped_reason = optional_string("skipped_reason");
    r.error = optional_string("error");
}

void to_json(nlohmann::json& j, const SuiteReport& r) {
    j = nlohmann::json{{"suite", r.suite},
                       {"config", r.config_echo},
                       {"checks", r.checks},
                       {"passed_count", r.passed_count},
                       {"failed_count", r.failed_count},
                       {"skipped_count", r.skipped_count},
                       {"wall_time_ms", r.wall_time_ms}};
}

void from_json(const nlohmann::json& j, SuiteReport& r) {
    j.at("suite").get_to(r.suite);
    j.at("config").get_to(r.config_echo);
    j.at("checks").get_to(r.checks);
    j.at("passed_count").get_to(r.passed_count);
    j.at("failed_count").get_to(r.failed_count);
    j.at("skipped_count").get_to(r.skipped_count);
    j.at("wall_time_ms").get_to(r.wall_time_ms);
}

std::string render_json(const std::vector<SuiteReport>& reports) {
    nlohmann::json j = reports.size() == 1 ? nlohmann::json(reports.front()) : nlohmann::json(reports);
    return j.dump(2) + "\n";
}

std::vector<SuiteReport> parse_json_reports(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.is_array()) return j.get<std::vector<SuiteReport>>();
    return {j.get<SuiteReport>()};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render_csv(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    os << "suite,label,weight,passed,exact,residual_midpoint,residual_radius\n";
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            os << csv_field(r.suite) << ',' << csv_field(c.label) << ',' << c.weight << ','
               << (c.passed ? "true" : "false") << ',' << (c.exact ? "true" : "false") << ','
               << csv_field(c.residual_midpoint) << ',' << csv_field(c.residual_radius) << '\n';
    return os.str();
}

std::string render_text(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        os << "== " << r.suite << ": " << r.passed_count << " passed (" << r.skipped_count << " skipped), "
           << r.failed_count << " failed\n";
        for (const auto& c : r.checks) {
            const char* tag = c.skipped_reason ? "SKIP" : (c.passed ? "PASS" : "FAIL");
            os << "  [" << tag << "] l=" << c.weight << "  " << c.label;
            if (c.skipped_reason) os << "  (" << *c.skipped_reason << ")";
            else if (c.error) os << "  error: " << *c.error;
            else os << "  residual " << c.residual_midpoint << " +/- " << c.residual_radius
                    << (c.exact ? "  [exact]" : "");
            os << '\n';
        }
        failed += r.failed_count;
    }
    os << (failed == 0 ? "ALL PASSED\n" : "FAILURES: " + std::to_string(failed) + "\n");
    return os.str();
}

}  // namespace dzv::cli
