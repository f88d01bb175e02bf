// fuzzybv: run a diagnostic or scenario described by a JSON config.
//
//   fuzzybv --config run.json [--out report.json] [--format json|csv] [--seed n] [--scale n]
//
// Flags override the matching config fields; the envelope echoes the merged config.

#include "fuzzybv/errors.hpp"
#include "fuzzybv/run_config.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fuzzybv;

int main(int argc, char** argv) {
    CLI::App app{"Bounded-variation diagnostics for fuzzy number sequences"};
    app.set_version_flag("--version", kToolVersion);
    std::string config_path, out_path, format;
    std::uint64_t seed = 0;
    std::int64_t scale = 0;
    app.add_option("--config", config_path, "JSON run config ('-' reads stdin)")->required();
    auto* out_opt = app.add_option("--out", out_path, "output path ('-' for stdout)");
    auto* fmt_opt = app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto* seed_opt = app.add_option("--seed", seed, "scenario seed");
    auto* scale_opt = app.add_option("--scale", scale, "scenario horizon multiplier")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), exit_code::config_error);
    }

    std::string text;
    if (config_path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(config_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot read config '" << config_path << "'\n";
            return exit_code::io_error;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }

    RunConfig cfg;
    ReportEnvelope env;
    try {
        cfg = parse_config_text(text);
        if (*out_opt) cfg.out = out_path;
        if (*fmt_opt) cfg.format = format == "csv" ? Format::csv : Format::json;
        if (*seed_opt) cfg.seed = seed;
        if (*scale_opt) cfg.scale = scale;
        env = execute(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_code::config_error;
    }

    try {
        write_text(cfg.out, render(env, cfg.format));
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::io_error;
    }
    if (!env.pass) {
        std::cerr << "scenario assertions failed\n";
        return exit_code::assertion_failed;
    }
    return exit_code::ok;
}
