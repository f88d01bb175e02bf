#include "fuzzybv/errors.hpp"
#include "fuzzybv/run_config.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fuzzybv;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::filesystem::path> shipped_configs() {
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(FUZZYBV_CONFIG_DIR)) {
        if (e.path().extension() == ".json") out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string field_of(const json& doc) {
    try {
        parse_config(doc);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "<accepted>";
}

// CSV cells parsed back to doubles ("nan" for JSON null)
std::vector<std::vector<double>> csv_numbers(const std::string& csv) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("shipped configs round-trip through serialize") {
    const auto configs = shipped_configs();
    REQUIRE(configs.size() >= 8);
    for (const auto& p : configs) {
        CAPTURE(p.string());
        const RunConfig cfg = parse_config_text(slurp(p));
        const json canonical = serialize_config(cfg);
        CHECK(parse_config(canonical) == cfg);
        CHECK(serialize_config(parse_config(canonical)) == canonical);
        CHECK(parse_config_text(canonical.dump()) == cfg);
    }
}

TEST_CASE("the documented rowsums example parses with defaults filled") {
    const auto cfg = parse_config_text(
        R"({"command":"rowsums","scheme":{"u":{"family":"power","a":1,"p":-4},"v":{"family":"const","c":1},"start":1},"K":10000})");
    CHECK(cfg.command == Command::rowsums);
    CHECK(cfg.K == 10000);
    CHECK(cfg.scheme["u"]["s"] == 0.0);
    CHECK(cfg.format == Format::json);
    const auto j = serialize_config(cfg);
    CHECK(j["policy"]["window"] == 0.5);
    CHECK(j["seed"] == 1);
}

TEST_CASE("config errors carry the field path") {
    const json scheme = {{"u", {{"family", "const"}, {"c", 1}}}, {"v", {{"family", "const"}, {"c", 1}}}, {"start", 2}};
    CHECK(field_of({{"command", "rowsums"}, {"scheme", scheme}, {"K", 1}}) == "K");
    CHECK(field_of({{"command", "rowsums"}, {"scheme", scheme}, {"K", 5}, {"Horizon", 3}}) == "Horizon");
    CHECK(field_of({{"command", "rowsums"}, {"scheme", scheme}}) == "K");
    CHECK(field_of({{"command", "fly"}}) == "command");
    CHECK(field_of({{"command", "rowsums"}, {"scheme", scheme}, {"K", 5}, {"format", "xml"}}) == "format");
    CHECK(field_of({{"command", "rowsums"}, {"scheme", scheme}, {"K", 5}, {"policy", {{"window", 2}}}}) == "policy");

    json zero = scheme;
    zero["v"]["c"] = 0;
    CHECK(field_of({{"command", "rowsums"}, {"scheme", zero}, {"K", 5}}) == "scheme.v.c");
    // zero that only shows up at an index: power with p > 0 at k = 0
    json vanishing = scheme;
    vanishing["start"] = 0;
    vanishing["u"] = {{"family", "power"}, {"p", 2}};
    CHECK(field_of({{"command", "rowsums"}, {"scheme", vanishing}, {"K", 5}}) == "scheme");

    const json seq = {{"family", "constant"}, {"value", {{"crisp", 1}}}};
    CHECK(field_of({{"command", "density"}, {"sequence", seq}, {"K", 5}, {"eps", 0}}) == "eps");
    CHECK(field_of({{"command", "density"}, {"sequence", seq}, {"K", 5}}) == "eps");
    CHECK(field_of({{"command", "density"}, {"sequence", seq}, {"K", 5}, {"eps", 1}, {"scheme", scheme}}) ==
          "scheme");
    json bad_seq = seq;
    bad_seq["value"] = {{"triangular", {2, 1, 3}}};
    CHECK(field_of({{"command", "density"}, {"sequence", bad_seq}, {"K", 5}, {"eps", 1}}) == "sequence.value");
    CHECK(field_of({{"command", "scenario"}, {"scenario", "nope"}}) == "scenario");
    CHECK_THROWS_AS(parse_config_text("{not json"), ConfigError);
}

TEST_CASE("a table sequence shorter than the horizon is a config error at run time") {
    const auto cfg = parse_config(json{{"command", "density"},
                                       {"sequence", {{"family", "table"}, {"values", {{{"crisp", 1}}, {{"crisp", 2}}}}}},
                                       {"K", 5},
                                       {"eps", 0.5}});
    CHECK_THROWS_AS(execute(cfg), ConfigError);
}

TEST_CASE("variation payload for the unbounded member") {
    const auto env = execute(parse_config_text(slurp(std::filesystem::path(FUZZYBV_CONFIG_DIR) / "unbounded_variation.json")));
    CHECK(env.payload["verdict"]["verdict"] == "convergent");
    CHECK(env.payload["table"]["rows"].size() == 10000);
    CHECK(env.payload["table"]["rows"][2] == json::array({3, 3.0, 7.0, 7.0 / 81.0, env.payload["table"]["rows"][2][4]}));
    CHECK(env.pass);
}

TEST_CASE("density on the zero sequence is all zeros") {
    const auto env = execute(parse_config_text(slurp(std::filesystem::path(FUZZYBV_CONFIG_DIR) / "zero_density.json")));
    for (const auto& row : env.payload["table"]["rows"]) {
        CHECK(row[1] == 0);
        CHECK(row[2] == 0.0);
    }
}

TEST_CASE("all-scenarios yields eight passing records") {
    const auto env = execute(parse_config(json{{"command", "all-scenarios"}}));
    CHECK(env.payload["scenarios"].size() == 8);
    CHECK(env.pass);
}

TEST_CASE("payload hashes are deterministic and exclude timestamps") {
    for (const auto& p : shipped_configs()) {
        CAPTURE(p.string());
        const auto cfg = parse_config_text(slurp(p));
        const auto a = execute(cfg), b = execute(cfg);
        CHECK(payload_hash(a.payload) == payload_hash(b.payload));
        const json ja = to_json(a);
        CHECK(ja["payload_hash"] == payload_hash(a.payload));
        CHECK(ja.contains("generated_at"));
        CHECK_FALSE(ja["payload"].contains("generated_at"));
    }
}

TEST_CASE("CSV and JSON carry the same numbers") {
    for (const char* name : {"unbounded_variation.json", "quartic_rowsums.json", "geometric_density.json",
                             "oscillating_cesaro.json", "unbounded_membership.json"}) {
        CAPTURE(name);
        const auto env = execute(parse_config_text(slurp(std::filesystem::path(FUZZYBV_CONFIG_DIR) / name)));
        const auto rows = csv_numbers(render(env, Format::csv));
        const json& table = env.payload["table"]["rows"];
        REQUIRE(rows.size() == table.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            REQUIRE(rows[i].size() == table[i].size());
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                const double want = table[i][j].is_null() ? NAN : table[i][j].get<double>();
                if (std::isnan(want)) {
                    CHECK(std::isnan(rows[i][j]));
                } else {
                    CHECK(rows[i][j] == want);
                }
            }
        }
    }
    const auto metric = execute(parse_config_text(slurp(std::filesystem::path(FUZZYBV_CONFIG_DIR) / "triangle_metric.json")));
    CHECK(render(metric, Format::csv).find("d,0.5\n") != std::string::npos);
}
