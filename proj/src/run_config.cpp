#include "fuzzybv/run_config.hpp"

#include "fuzzybv/errors.hpp"
#include "fuzzybv/families.hpp"
#include "fuzzybv/sequence_spaces.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace fuzzybv {

using nlohmann::json;
namespace fam = families;

namespace {

struct CommandName {
    Command command;
    const char* name;
};
constexpr CommandName kCommands[] = {
    {Command::membership, "membership"}, {Command::variation, "variation"},
    {Command::rowsums, "rowsums"},       {Command::density, "density"},
    {Command::cesaro, "cesaro"},         {Command::metric_d, "metric-d"},
    {Command::scenario, "scenario"},     {Command::all_scenarios, "all-scenarios"},
};

// Fields each command accepts on top of the common ones.
std::vector<std::string> command_fields(Command c) {
    switch (c) {
        case Command::membership: return {"sequence", "scheme", "K", "p"};
        case Command::variation: return {"sequence", "scheme", "K"};
        case Command::rowsums: return {"scheme", "K"};
        case Command::density: return {"sequence", "K", "eps"};
        case Command::cesaro: return {"sequence", "limit", "K", "eps"};
        case Command::metric_d: return {"x", "y"};
        case Command::scenario: return {"scenario", "params"};
        case Command::all_scenarios: return {};
    }
    return {};
}

const std::vector<std::string> kCommonFields{"command", "tol", "policy", "format", "out", "seed", "scale"};

bool uses(Command c, const char* field) {
    const auto f = command_fields(c);
    return std::find(f.begin(), f.end(), field) != f.end();
}

std::string string_field(const json& j, const char* key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_string()) throw ConfigError(key, "expected a string");
    return j[key].get<std::string>();
}

const json& require(const json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(key, "missing required field");
    return j[key];
}

ClassifierPolicy parse_policy(const json& j) {
    ClassifierPolicy p;
    if (j.is_null()) return p;
    fam::reject_unknown(j, {"window", "slope_margin", "tail_tolerance"}, "policy");
    p.window = fam::number_field(j, "window", "policy", p.window);
    p.slope_margin = fam::number_field(j, "slope_margin", "policy", p.slope_margin);
    p.tail_tolerance = fam::number_field(j, "tail_tolerance", "policy", p.tail_tolerance);
    try {
        p.check();
    } catch (const std::exception& e) {
        throw ConfigError("policy", e.what());
    }
    return p;
}

index_t start_of(const RunConfig& cfg) {
    if (!cfg.scheme.is_null()) return cfg.scheme["start"].get<index_t>();
    return fam::sequence_start(cfg.sequence, 0);
}

}  // namespace

std::string_view to_string(Command c) noexcept {
    for (const auto& [cmd, name] : kCommands) {
        if (cmd == c) return name;
    }
    return "?";
}

std::string_view to_string(Format f) noexcept { return f == Format::json ? "json" : "csv"; }

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
    RunConfig cfg;

    const std::string cmd = string_field(doc, "command", "");
    if (cmd.empty()) throw ConfigError("command", "missing required field");
    const auto it = std::find_if(std::begin(kCommands), std::end(kCommands),
                                 [&](const CommandName& c) { return cmd == c.name; });
    if (it == std::end(kCommands)) throw ConfigError("command", "unknown command '" + cmd + "'");
    cfg.command = it->command;

    const auto allowed = command_fields(cfg.command);
    for (const auto& [key, _] : doc.items()) {
        const bool ok = std::count(kCommonFields.begin(), kCommonFields.end(), key) ||
                        std::count(allowed.begin(), allowed.end(), key);
        if (!ok) throw ConfigError(key, "unknown field for command '" + cmd + "'");
    }

    cfg.tol = fam::number_field(doc, "tol", "", cfg.tol);
    if (cfg.tol < 0) throw ConfigError("tol", "must be non-negative");
    cfg.policy = parse_policy(doc.contains("policy") ? doc["policy"] : json());

    const std::string format = string_field(doc, "format", "json");
    if (format == "json") {
        cfg.format = Format::json;
    } else if (format == "csv") {
        cfg.format = Format::csv;
    } else {
        throw ConfigError("format", "expected 'json' or 'csv'");
    }
    cfg.out = string_field(doc, "out", "");

    const index_t seed = fam::integer_field(doc, "seed", "", 1);
    if (seed < 0) throw ConfigError("seed", "must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.scale = fam::integer_field(doc, "scale", "", 1);
    if (cfg.scale < 1) throw ConfigError("scale", "must be >= 1");

    const Command c = cfg.command;
    if (uses(c, "scheme")) cfg.scheme = fam::normalize_scheme(require(doc, "scheme"), "scheme");
    if (uses(c, "sequence")) {
        cfg.sequence = fam::normalize_sequence(require(doc, "sequence"), "sequence");
        if (!cfg.scheme.is_null() && cfg.sequence.contains("start") &&
            cfg.sequence["start"] != cfg.scheme["start"]) {
            throw ConfigError("sequence.start", "differs from scheme.start");
        }
    }
    if (uses(c, "K")) {
        cfg.K = fam::integer_field(doc, "K", "");
        if (cfg.K < start_of(cfg)) throw ConfigError("K", "horizon below start index");
        if (!cfg.scheme.is_null()) {
            try {
                fam::build_scheme(cfg.scheme).check_admissible(cfg.K);
            } catch (const WeightError& e) {
                throw ConfigError("scheme", e.what());
            }
        }
    }
    if (uses(c, "eps")) {
        cfg.eps = fam::number_field(doc, "eps", "");
        if (!(*cfg.eps > 0)) throw ConfigError("eps", "must be positive");
    }
    if (uses(c, "p")) {
        cfg.p = fam::number_field(doc, "p", "", 1.0);
        if (cfg.p < 1) throw ConfigError("p", "must be >= 1");
    }
    if (uses(c, "limit")) cfg.limit = fam::normalize_fuzzy(require(doc, "limit"), "limit");
    if (uses(c, "x")) {
        cfg.x = fam::normalize_fuzzy(require(doc, "x"), "x");
        cfg.y = fam::normalize_fuzzy(require(doc, "y"), "y");
    }
    if (uses(c, "scenario")) {
        const auto& s = require(doc, "scenario");
        if (!s.is_string()) throw ConfigError("scenario", "expected a string");
        cfg.scenario = std::string(to_string(scenario_from_string(s.get<std::string>())));
        if (doc.contains("params") && !doc["params"].is_null()) {
            if (!doc["params"].is_object()) throw ConfigError("params", "expected an object");
            cfg.params = doc["params"];
        }
    }
    return cfg;
}

RunConfig parse_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

json serialize_config(const RunConfig& cfg) {
    json j = {{"command", to_string(cfg.command)},
              {"tol", cfg.tol},
              {"policy",
               {{"window", cfg.policy.window},
                {"slope_margin", cfg.policy.slope_margin},
                {"tail_tolerance", cfg.policy.tail_tolerance}}},
              {"format", to_string(cfg.format)},
              {"out", cfg.out},
              {"seed", cfg.seed},
              {"scale", cfg.scale}};
    const Command c = cfg.command;
    if (uses(c, "sequence")) j["sequence"] = cfg.sequence;
    if (uses(c, "scheme")) j["scheme"] = cfg.scheme;
    if (uses(c, "K")) j["K"] = cfg.K;
    if (uses(c, "eps") && cfg.eps) j["eps"] = *cfg.eps;
    if (uses(c, "p")) j["p"] = cfg.p;
    if (uses(c, "limit")) j["limit"] = cfg.limit;
    if (uses(c, "x")) {
        j["x"] = cfg.x;
        j["y"] = cfg.y;
    }
    if (uses(c, "scenario")) {
        j["scenario"] = cfg.scenario;
        if (!cfg.params.is_null()) j["params"] = cfg.params;
    }
    return j;
}

namespace {

json run_membership(const RunConfig& cfg) {
    const WeightScheme s = fam::build_scheme(cfg.scheme);
    const FuzzySequence x = fam::build_sequence(cfg.sequence, s.start());
    const LpPartial lp = lp_partial(x, cfg.p, cfg.K, cfg.policy);
    const SupNormPartial sup = sup_norm_partial(x, cfg.K, cfg.policy);
    const VariationReport var = variation_report(x, s, cfg.K, cfg.policy);

    json table = make_table({"k", "norm_k", "d_k", "t_k", "V_k"});
    for (std::size_t j = 0; j < var.terms.size(); ++j) {
        table["rows"].push_back({var.start + static_cast<index_t>(j), sup.norms[j], var.distances[j], var.terms[j],
                                 var.partial[j]});
    }
    return {{"lp", {{"p", cfg.p}, {"sum", lp.sum}, {"verdict", to_json(lp.verdict)}}},
            {"linf", {{"sup", sup.sup}, {"growth", to_string(sup.growth)}, {"increments", to_json(sup.increments)}}},
            {"bv", {{"total", var.total()}, {"verdict", to_json(var.verdict)}}},
            {"table", std::move(table)}};
}

json run_density(const RunConfig& cfg) {
    const index_t start = start_of(cfg);
    const FuzzySequence x = fam::build_sequence(cfg.sequence, start);
    const auto counts = density_counts(x, *cfg.eps, cfg.K);
    json table = make_table({"n", "count", "density"});
    for (std::size_t j = 0; j < counts.size(); ++j) {
        table["rows"].push_back({start + static_cast<index_t>(j), counts[j],
                                 static_cast<double>(counts[j]) / static_cast<double>(j + 1)});
    }
    return {{"start", start},
            {"horizon", cfg.K},
            {"eps", *cfg.eps},
            {"density", static_cast<double>(counts.back()) / static_cast<double>(counts.size())},
            {"table", std::move(table)}};
}

json run_cesaro(const RunConfig& cfg) {
    const index_t start = start_of(cfg);
    const FuzzySequence x = fam::build_sequence(cfg.sequence, start);
    const auto profile = cesaro_profile(x, fam::build_fuzzy(cfg.limit), cfg.K);
    json table = make_table({"k", "distance"});
    for (std::size_t j = 0; j < profile.size(); ++j) {
        table["rows"].push_back({start + static_cast<index_t>(j), profile[j]});
    }
    json out = {{"start", start}, {"horizon", cfg.K}, {"eps", *cfg.eps}, {"final", profile.back()}};
    // last index at or above eps; everything after it stays below
    const auto last_above = std::find_if(profile.rbegin(), profile.rend(), [&](double v) { return v >= *cfg.eps; });
    const auto settled = static_cast<index_t>(profile.rend() - last_above);
    out["settled_from"] = settled < static_cast<index_t>(profile.size()) ? json(start + settled) : json(nullptr);
    out["table"] = std::move(table);
    return out;
}

json run_metric(const RunConfig& cfg) {
    const FuzzyNumber x = fam::build_fuzzy(cfg.x), y = fam::build_fuzzy(cfg.y);
    return {{"d", metric_d(x, y)},
            {"norm_x", norm(x)},
            {"norm_y", norm(y)},
            {"midpoint_distance", profile_sup_distance(midpoint_profile(x), midpoint_profile(y))},
            {"equivalent", are_equivalent(x, y, cfg.tol)}};
}

json run_scenarios(const RunConfig& cfg, bool& pass) {
    std::vector<ScenarioReport> reports;
    if (cfg.command == Command::scenario) {
        const ScenarioName name = scenario_from_string(cfg.scenario);
        Scenario sc = cfg.params.is_null() ? default_scenario(name, cfg.scale, cfg.seed) : Scenario{name, cfg.params};
        reports.push_back(run_scenario(sc));
    } else {
        reports = run_all(cfg.seed, cfg.scale);
    }
    json list = json::array();
    json table = make_table({"scenario", "assertion", "measured", "threshold", "pass"});
    pass = true;
    for (const auto& r : reports) {
        pass = pass && r.pass;
        list.push_back(to_json(r));
        for (const auto& a : r.assertions) table["rows"].push_back({r.name, a.name, a.measured, a.threshold, a.pass});
    }
    return {{"scenarios", std::move(list)}, {"pass", pass}, {"table", std::move(table)}};
}

}  // namespace

ReportEnvelope execute(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    ReportEnvelope env;
    env.command = std::string(to_string(cfg.command));
    env.config = serialize_config(cfg);
    try {
        switch (cfg.command) {
            case Command::membership: env.payload = run_membership(cfg); break;
            case Command::variation: {
                const WeightScheme s = fam::build_scheme(cfg.scheme);
                env.payload = to_json(variation_report(fam::build_sequence(cfg.sequence, s.start()), s, cfg.K, cfg.policy));
                break;
            }
            case Command::rowsums:
                env.payload = to_json(row_sum_diagnostic(fam::build_scheme(cfg.scheme), cfg.K, cfg.policy));
                break;
            case Command::density: env.payload = run_density(cfg); break;
            case Command::cesaro: env.payload = run_cesaro(cfg); break;
            case Command::metric_d: env.payload = run_metric(cfg); break;
            case Command::scenario:
            case Command::all_scenarios: env.payload = run_scenarios(cfg, env.pass); break;
        }
    } catch (const IndexError& e) {
        throw ConfigError("K", std::string("horizon exceeds the sequence definition: ") + e.what());
    } catch (const WeightError& e) {
        throw ConfigError("scheme", e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError("", e.what());
    }
    env.generated_at = utc_timestamp();
    env.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return env;
}

std::string render(const ReportEnvelope& env, Format format) {
    if (format == Format::csv) return to_csv(env.payload);
    return to_json(env).dump(2) + "\n";
}

}  // namespace fuzzybv
