#include "dzv/cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace dzv::cli {

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Text: return "text";
    }
    return "text";
}

OutputFormat parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "text") return OutputFormat::Text;
    throw UsageError("unknown output format '" + std::string(text) + "' (expected json, csv or text)");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "sum-formula", "weighted-sum", "harmonic", "gkz-parity",     "theorem1",  "corollary1",
        "prop1",       "lemma1",       "eq26",     "euler-bernoulli", "ramanujan", "corollary2-chain",
    };
    return names;
}

bool is_suite(std::string_view name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError(std::string("malformed ") + what + " '" + std::string(text) + "'");
    return value;
}

}  // namespace

std::pair<int, int> parse_weight_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const int w = parse_int(text, "weight");
        return {w, w};
    }
    return {parse_int(text.substr(0, dots), "weight range"), parse_int(text.substr(dots + 2), "weight range")};
}

unsigned parse_tolerance_exponent(std::string_view text) {
    const std::string_view prefix = "1e-";
    if (text.substr(0, prefix.size()) != prefix)
        throw UsageError("tolerance must look like 1e-N, got '" + std::string(text) + "'");
    const int e = parse_int(text.substr(prefix.size()), "tolerance exponent");
    if (e <= 0) throw UsageError("tolerance exponent must be positive");
    return static_cast<unsigned>(e);
}

std::vector<std::string> parse_suite_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string name(text.substr(start, end - start));
        if (name == "all") out.insert(out.end(), suite_names().begin(), suite_names().end());
        else if (!name.empty()) out.push_back(std::move(name));
        start = end + 1;
    }
    return out;
}

unsigned default_precision() {
    if (const char* env = std::getenv(kPrecisionEnv); env != nullptr && *env != '\0') {
        const int bits = parse_int(env, kPrecisionEnv);
        if (bits < 64) throw UsageError(std::string(kPrecisionEnv) + " must be at least 64");
        return static_cast<unsigned>(bits);
    }
    return 192;
}

void RunConfig::validate() const {
    if (precision_bits < 64) throw UsageError("precision must be at least 64 bits");
    if (weight_min > weight_max) throw UsageError("weight range is empty (min > max)");
    if (weight_min < 1) throw UsageError("weights must be positive");
    if (parallelism < 1) throw UsageError("--jobs must be at least 1");
    if (suites.empty()) throw UsageError("no suites selected");
    for (const auto& s : suites)
        if (!is_suite(s)) throw UsageError("unknown suite '" + s + "'");
}

}  // namespace dzv::cli
