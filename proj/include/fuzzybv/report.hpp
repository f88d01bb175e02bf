#pragma once

#include "fuzzybv/classify.hpp"
#include "fuzzybv/harness.hpp"
#include "fuzzybv/sequence_spaces.hpp"
#include "fuzzybv/weighted_mean.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace fuzzybv {

inline constexpr const char* kToolName = "fuzzybv";
inline constexpr const char* kToolVersion = "0.1.0";

/// Output file could not be written (exit code 3).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Payload tables are {"columns": [...], "rows": [[...], ...]}; CSV output is rendered
/// from the same record, so both formats carry identical values.
nlohmann::json make_table(std::vector<std::string> columns);

nlohmann::json to_json(const SeriesVerdict& v);
nlohmann::json to_json(const VariationReport& r);   ///< table k, d_k, inner_k, t_k, V_k
nlohmann::json to_json(const RowSumDiagnostic& r);  ///< table k, r_k, abs_sum

struct ReportEnvelope {
    std::string command;
    nlohmann::json config;   ///< canonical config echo
    nlohmann::json payload;
    bool pass = true;        ///< false when a scenario assertion failed
    std::string generated_at;
    double wall_seconds = 0.0;
};

/// FNV-1a (64 bit, hex) of the compact payload dump. Timestamps are outside the payload.
std::string payload_hash(const nlohmann::json& payload);

nlohmann::json to_json(const ReportEnvelope& env);

/// The payload table (or the payload's scalar fields as key,value rows when it has none).
std::string to_csv(const nlohmann::json& payload);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

/// Writes `text` to `path`, or to stdout when path is empty or "-". Throws IoError.
void write_text(const std::string& path, const std::string& text);

}  // namespace fuzzybv
