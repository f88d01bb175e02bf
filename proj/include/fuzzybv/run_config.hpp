#pragma once

#include "fuzzybv/classify.hpp"
#include "fuzzybv/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fuzzybv {

enum class Command { membership, variation, rowsums, density, cesaro, metric_d, scenario, all_scenarios };
enum class Format { json, csv };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(Format f) noexcept;

/// A validated run. Family records (sequence, scheme, x, y, limit, params) are kept in
/// canonical form, so serialize_config(cfg) parses back to an equal value.
struct RunConfig {
    Command command = Command::variation;
    nlohmann::json sequence;  ///< membership, variation, density, cesaro
    nlohmann::json scheme;    ///< membership, variation, rowsums
    index_t K = 0;            ///< all but metric-d and the scenario commands
    std::optional<double> eps;  ///< density, cesaro
    double p = 1.0;           ///< membership
    nlohmann::json limit;     ///< cesaro
    nlohmann::json x, y;      ///< metric-d
    std::string scenario;     ///< scenario
    nlohmann::json params;    ///< scenario: explicit parameters, or null for the defaults
    double tol = 1e-9;
    ClassifierPolicy policy;
    Format format = Format::json;
    std::string out;          ///< empty writes to stdout
    std::uint64_t seed = 1;
    std::int64_t scale = 1;

    bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError with the offending field path.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(std::string_view text);

nlohmann::json serialize_config(const RunConfig& cfg);

/// Runs the command. Errors in family construction that only show up at run time
/// (index-dependent zero weights, mismatched starts) throw ConfigError.
ReportEnvelope execute(const RunConfig& cfg);

/// The rendered output in cfg.format.
std::string render(const ReportEnvelope& env, Format format);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int assertion_failed = 1;
inline constexpr int config_error = 2;
inline constexpr int io_error = 3;
}  // namespace exit_code

}  // namespace fuzzybv
