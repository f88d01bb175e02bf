#include "fuzzybv/report.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

namespace fuzzybv {

using nlohmann::json;

json make_table(std::vector<std::string> columns) {
    return {{"columns", std::move(columns)}, {"rows", json::array()}};
}

json to_json(const SeriesVerdict& v) {
    return {{"verdict", to_string(v.verdict)}, {"slope", v.slope},           {"tail_sum", v.tail_sum},
            {"term_limit", v.term_limit},       {"partial_sum", v.partial_sum}, {"window_begin", v.window_begin},
            {"horizon", v.horizon}};
}

json to_json(const VariationReport& r) {
    json table = make_table({"k", "d_k", "inner_k", "t_k", "V_k"});
    for (std::size_t j = 0; j < r.terms.size(); ++j) {
        table["rows"].push_back(
            {r.start + static_cast<index_t>(j), r.distances[j], r.inner[j], r.terms[j], r.partial[j]});
    }
    return {{"start", r.start},
            {"horizon", r.horizon},
            {"total", r.total()},
            {"verdict", to_json(r.verdict)},
            {"table", std::move(table)}};
}

json to_json(const RowSumDiagnostic& r) {
    json table = make_table({"k", "r_k", "abs_sum"});
    for (std::size_t j = 0; j < r.row_sums.size(); ++j) {
        table["rows"].push_back({r.start + static_cast<index_t>(j), r.row_sums[j], r.cumulative_abs[j]});
    }
    return {{"start", r.start},
            {"horizon", r.horizon},
            {"abs_sum", r.abs_sum},
            {"infimum", r.infimum},
            {"infimum_at", r.infimum_at},
            {"verdict", to_json(r.verdict)},
            {"table", std::move(table)}};
}

std::string payload_hash(const json& payload) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : payload.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

json to_json(const ReportEnvelope& env) {
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", env.command},
            {"config", env.config},
            {"payload", env.payload},
            {"payload_hash", payload_hash(env.payload)},
            {"pass", env.pass},
            {"generated_at", env.generated_at},
            {"timings", {{"wall_seconds", env.wall_seconds}}}};
}

namespace {

std::string csv_cell(const json& v) {
    char buf[40];
    switch (v.type()) {
        case json::value_t::number_integer:
            std::snprintf(buf, sizeof buf, "%" PRId64, v.get<std::int64_t>());
            return buf;
        case json::value_t::number_unsigned:
            std::snprintf(buf, sizeof buf, "%" PRIu64, v.get<std::uint64_t>());
            return buf;
        case json::value_t::number_float:
            std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
            return buf;
        case json::value_t::boolean: return v.get<bool>() ? "true" : "false";
        case json::value_t::null: return "nan";  // the JSON writer turns NaN into null
        case json::value_t::string: {
            const auto s = v.get<std::string>();
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string q = "\"";
            for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }
        default: return csv_cell(json(v.dump()));
    }
}

void csv_row(std::string& out, const json& cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out += ',';
        out += csv_cell(c);
        first = false;
    }
    out += '\n';
}

}  // namespace

std::string to_csv(const json& payload) {
    std::string out;
    if (payload.contains("table")) {
        csv_row(out, payload["table"]["columns"]);
        for (const auto& row : payload["table"]["rows"]) csv_row(out, row);
        return out;
    }
    out = "key,value\n";
    for (const auto& [k, v] : payload.items()) {
        if (v.is_primitive()) csv_row(out, json::array({k, v}));
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw IoError("cannot write to stdout");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace fuzzybv
