#include "dzv/cli/app.hpp"

#include "dzv/bernoulli.hpp"
#include "dzv/cli/report.hpp"
#include "dzv/cli/suites.hpp"
#include "dzv/double_zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace dzv::cli {

namespace {

// Keys of an optional JSON config file; command-line flags take precedence.
void apply_config_file(const std::string& path, RunConfig& cfg, const CLI::App& verify) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
    auto unset = [&verify](const char* flag) { return verify.get_option(flag)->count() == 0; };
    try {
        if (j.contains("suites") && unset("--suites")) {
            const auto& s = j.at("suites");
            cfg.suites = s.is_array() ? s.get<std::vector<std::string>>() : parse_suite_list(s.get<std::string>());
        }
        if (j.contains("weights") && unset("--weights")) {
            auto [lo, hi] = parse_weight_range(j.at("weights").get<std::string>());
            cfg.weight_min = lo;
            cfg.weight_max = hi;
        }
        if (j.contains("precision") && unset("--precision")) cfg.precision_bits = j.at("precision").get<unsigned>();
        if (j.contains("tol") && unset("--tol")) cfg.tolerance_exponent = parse_tolerance_exponent(j.at("tol").get<std::string>());
        if (j.contains("format") && unset("--format")) cfg.output_format = parse_format(j.at("format").get<std::string>());
        if (j.contains("out") && unset("--out")) cfg.output_path = j.at("out").get<std::string>();
        if (j.contains("jobs") && unset("--jobs")) cfg.parallelism = j.at("jobs").get<unsigned>();
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("config file '" + path + "': " + e.what());
    }
}

std::string render(const std::vector<SuiteReport>& reports, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return render_json(reports);
        case OutputFormat::Csv: return render_csv(reports);
        case OutputFormat::Text: return render_text(reports);
    }
    return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Double zeta values, Bernoulli identities and restricted sum formula checks"};
    app.require_subcommand(1);

    long long bernoulli_index = 0;
    auto* bern = app.add_subcommand("bernoulli", "Print B_m exactly as p/q");
    bern->add_option("m", bernoulli_index, "index m >= 0")->required();

    int l1 = 0, l2 = 0;
    unsigned dz_precision = 0;
    auto* dz = app.add_subcommand("dzeta", "Print the certified digits of zeta(l1, l2)");
    dz->add_option("l1", l1, "first index, >= 2")->required();
    dz->add_option("l2", l2, "second index, >= 1")->required();
    dz->add_option("-p,--precision", dz_precision, "working precision in bits");

    RunConfig cfg;
    std::string suites_text = "all", weights_text, tol_text, format_text, config_path;
    auto* verify = app.add_subcommand("verify", "Run verification suites over a weight range");
    verify->add_option("--suites", suites_text, "comma separated suite names, or 'all'");
    verify->add_option("--weights", weights_text, "weight range A..B");
    verify->add_option("--precision", cfg.precision_bits, "working precision in bits");
    verify->add_option("--tol", tol_text, "residual tolerance, 1e-N");
    verify->add_option("--format", format_text, "json, csv or text");
    verify->add_option("--out", cfg.output_path, "write the report to this path");
    verify->add_option("--jobs", cfg.parallelism, "worker threads");
    verify->add_option("--config", config_path, "JSON config file with the same keys as the flags");

    std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_tail.begin(), argv_tail.end());
    try {
        app.parse(argv_tail);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (bern->parsed()) {
            if (bernoulli_index < 0) throw UsageError("bernoulli: m must be >= 0");
            out << bernoulli(static_cast<unsigned>(bernoulli_index)).to_string() << "\n";
            return kExitOk;
        }
        if (dz->parsed()) {
            if (l1 < 2 || l2 < 1) throw UsageError("dzeta: need l1 >= 2 and l2 >= 1 (the series diverges otherwise)");
            const unsigned bits = dz_precision != 0 ? dz_precision : default_precision();
            if (bits < 64) throw UsageError("precision must be at least 64 bits");
            const RealBall v = double_zeta(IndexPair(l1, l2), PrecisionCtx(bits));
            out << certified_digits(v) << "\n";
            return kExitOk;
        }

        if (verify->get_option("--precision")->count() == 0) cfg.precision_bits = default_precision();
        if (!config_path.empty()) apply_config_file(config_path, cfg, *verify);
        if (verify->get_option("--suites")->count() > 0 || cfg.suites.empty()) cfg.suites = parse_suite_list(suites_text);
        if (!weights_text.empty()) {
            auto [lo, hi] = parse_weight_range(weights_text);
            cfg.weight_min = lo;
            cfg.weight_max = hi;
        }
        if (!tol_text.empty()) cfg.tolerance_exponent = parse_tolerance_exponent(tol_text);
        if (!format_text.empty()) cfg.output_format = parse_format(format_text);
        cfg.validate();

        const std::vector<SuiteReport> reports = run_all(cfg);
        const std::string text = render(reports, cfg.output_format);
        if (cfg.output_path) {
            std::ofstream file(*cfg.output_path);
            if (!file) throw UsageError("cannot write '" + *cfg.output_path + "'");
            file << text;
        } else {
            out << text;
        }
        for (const auto& r : reports)
            if (r.failed_count > 0) return kExitFailure;
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace dzv::cli
