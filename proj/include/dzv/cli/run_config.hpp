#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dzv::cli {

enum class OutputFormat { Json, Csv, Text };

std::string to_string(OutputFormat f);
OutputFormat parse_format(std::string_view text);

struct RunConfig {
    unsigned precision_bits = 192;
    unsigned tolerance_exponent = 40;  // tolerance = 10^-e
    int weight_min = 3;
    int weight_max = 12;
    std::vector<std::string> suites;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> output_path;
    unsigned parallelism = 1;

    // Throws UsageError when an invariant is violated.
    void validate() const;
    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Registered suite names, in execution order.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

// "A..B" or a single weight "A".
std::pair<int, int> parse_weight_range(std::string_view text);
// "1e-N" -> N.
unsigned parse_tolerance_exponent(std::string_view text);
// Comma separated; "all" expands to every suite.
std::vector<std::string> parse_suite_list(std::string_view text);

// Environment variable consulted for the default precision.
inline constexpr const char* kPrecisionEnv = "DZV_PRECISION";
unsigned default_precision();

}  // namespace dzv::cli
